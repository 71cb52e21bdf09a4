"""异常体系：每个异常带一个稳定的 code，CLI 据此输出单行机器可解析的错误"""


class ELCError(Exception):
    code = "elc-error"


class ConfigError(ELCError):
    code = "bad-config"


class GraphError(ELCError, ValueError):
    code = "invalid-graph"


class VertexRangeError(GraphError):
    code = "vertex-out-of-range"


class NotAnEdgeError(GraphError):
    code = "not-an-edge"

    def __init__(self, u: int, v: int):
        super().__init__(f"{{{u + 1},{v + 1}}} is not an edge")
        self.u, self.v = u, v


class NotBipartiteError(GraphError):
    code = "not-bipartite"


class InvalidColoringError(GraphError):
    code = "invalid-coloring"


class DisconnectedGraphError(GraphError):
    code = "disconnected"

    def __init__(self, components):
        self.components = [sorted(c) for c in components]
        listing = " | ".join(",".join(str(v + 1) for v in c) for c in self.components)
        super().__init__(f"graph has {len(self.components)} components: {listing}")


class OrbitOverflowError(ELCError):
    code = "orbit-overflow"

    def __init__(self, cap: int):
        super().__init__(f"orbit exceeds cap of {cap} members")
        self.cap = cap


class CodeError(ELCError, ValueError):
    code = "invalid-code"


class RankDeficientError(CodeError):
    code = "rank-deficient"


class GraphBridgeError(CodeError):
    code = "no-graph-bridge"


class DualCodeError(CodeError):
    code = "zero-dual"


class DecomposableCodeError(CodeError):
    code = "decomposable"


class GuardExceededError(ELCError):
    code = "guard-exceeded"


class EulerTransformError(ELCError, ArithmeticError):
    code = "non-integral"


class IncompleteRepSetError(ELCError):
    code = "incomplete-repset"


class FormatError(ELCError, ValueError):
    code = "bad-format"
