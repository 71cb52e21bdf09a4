import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from core.errors import ConfigError

load_dotenv()


class Settings(BaseModel):
    """运行参数：全部来自环境变量（.env），CLI 参数可覆盖其中一部分"""
    threads: int = Field(1, ge=1)
    log_dir: str = "logs"
    log_level: str = "INFO"
    bipartite_guard: int = Field(12, ge=1, le=64)
    general_guard: int = Field(9, ge=1, le=64)
    orbit_cap: Optional[int] = Field(None, ge=1)
    canon_cache_size: int = Field(65536, ge=0)
    automorphism_pruning: bool = True
    mindist_guard: int = Field(24, ge=0)
    infoset_guard: int = Field(10**7, ge=1)


_ENV_MAP = {
    "threads": "ELC_THREADS",
    "log_dir": "ELC_LOG_DIR",
    "log_level": "ELC_LOG_LEVEL",
    "bipartite_guard": "ELC_BIPARTITE_GUARD",
    "general_guard": "ELC_GENERAL_GUARD",
    "orbit_cap": "ELC_ORBIT_CAP",
    "canon_cache_size": "ELC_CANON_CACHE",
    "automorphism_pruning": "ELC_AUTOMORPHISM_PRUNING",
    "mindist_guard": "ELC_MINDIST_GUARD",
    "infoset_guard": "ELC_INFOSET_GUARD",
}


def load_settings(environ=None) -> Settings:
    environ = os.environ if environ is None else environ
    raw = {}
    for field, var in _ENV_MAP.items():
        value = environ.get(var)
        if value is None:
            continue
        if field == "orbit_cap" and value.strip().lower() in ("", "none", "0"):
            raw[field] = None
            continue
        raw[field] = value
    try:
        return Settings(**raw)
    except ValidationError as e:
        bad = ", ".join(_ENV_MAP[err["loc"][0]] for err in e.errors() if err["loc"])
        raise ConfigError(f"invalid environment settings: {bad}") from e


settings = load_settings()
