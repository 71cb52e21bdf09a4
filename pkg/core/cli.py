"""命令行入口：python -m core.cli <pivot|orbit|code|census|convert> ...

失败时 stderr 输出一行 "error: <code>: <message>"，退出码 2。
"""
import sys
from typing import List, Optional

from core.errors import ELCError


def main(argv: Optional[List[str]] = None) -> int:
    try:
        # 配置在导入时读取，错误的 ELC_* 也要走单行错误输出
        from core.commands import build_parser
    except ELCError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return 2
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ELCError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: io: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
