import sqlite3
import os
from typing import Dict, Optional
from core.logger import logger
from core.models import RepSet

class RepStore:
    """已完成的普查层级（RepSet）持久化到 SQLite，classify_bipartite 据此断点续跑"""

    def __init__(self, db_path: str = "data/census.db"):
        self.db_path = db_path
        self._init_db()

    def _init_db(self):
        if os.path.dirname(self.db_path):
            os.makedirs(os.path.dirname(self.db_path), exist_ok=True)
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()
        cursor.execute('''CREATE TABLE IF NOT EXISTS levels
                         (kind TEXT, n INTEGER, repset TEXT, updated_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                          PRIMARY KEY (kind, n))''')
        conn.commit()
        conn.close()

    def load(self, kind: str, n: int) -> Optional[RepSet]:
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()
        cursor.execute("SELECT repset FROM levels WHERE kind = ? AND n = ?", (kind, n))
        row = cursor.fetchone()
        conn.close()
        if not row:
            return None
        rs = RepSet.model_validate_json(row[0])
        return rs if rs.complete else None

    def load_levels(self, kind: str, n_max: int) -> Dict[int, RepSet]:
        """从 n=1 起连续的已完成层级"""
        levels = {}
        for n in range(1, n_max + 1):
            rs = self.load(kind, n)
            if rs is None:
                break
            levels[n] = rs
        if levels:
            logger.info(f"[Store] Resuming {kind} census: levels 1..{max(levels)} loaded from {self.db_path}")
        return levels

    def save(self, kind: str, rs: RepSet):
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()
        cursor.execute("INSERT OR REPLACE INTO levels (kind, n, repset, updated_at) VALUES (?, ?, ?, CURRENT_TIMESTAMP)",
                       (kind, rs.n, rs.model_dump_json()))
        conn.commit()
        conn.close()
        logger.info(f"[Store] Saved {kind} level n={rs.n} ({rs.count} orbits)")
