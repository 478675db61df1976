"""
Code Store - The small-LCD database: one .g2m file per record plus a JSON-lines index
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ValidationError

from modules.codes import CodeParams, CodeRecord, LinearCode
from modules.gf2 import BitMatrix

INDEX_FILE = "index.jsonl"

# Lengths the database is expected to cover, per dimension
SUPPORTED_RANGES = {4: range(6, 20), 5: range(32, 36), 6: range(6, 69)}


class IndexEntry(BaseModel):
    name: str
    n: int
    k: int
    d: int
    hull: int
    provenance: str
    file: str
    seed: Optional[int] = None
    notes: str = ""


class CodeStore:
    """Reads and writes verified records under a database directory"""

    def __init__(self, db_path: str = "db"):
        self.db_path = Path(db_path)
        self.logger = self._setup_logger()

    def _setup_logger(self) -> logging.Logger:
        logger = logging.getLogger("CodeStore")
        logger.setLevel(logging.INFO)
        return logger

    @property
    def index_path(self) -> Path:
        return self.db_path / INDEX_FILE

    def save(self, record: CodeRecord) -> Path:
        """
        Write the generator atomically, then append its index line

        Returns:
            Path of the .g2m file
        """
        filename = f"{record.name}.g2m"
        path = record.generator.write_g2m(self.db_path / filename)
        p = record.params
        entry = IndexEntry(
            name=record.name,
            n=p.n,
            k=p.k,
            d=p.d,
            hull=p.hull_dim,
            provenance=record.provenance,
            file=filename,
            seed=record.seed,
            notes=record.notes,
        )
        with open(self.index_path, "a", encoding="utf-8") as f:
            f.write(json.dumps(entry.model_dump(), ensure_ascii=False) + "\n")
        self.logger.info(f"Stored {record.name}: {record.summary()}")
        return path

    def entries(self) -> Dict[str, IndexEntry]:
        """Index entries by name; later lines replace earlier ones."""
        if not self.index_path.exists():
            return {}
        entries: Dict[str, IndexEntry] = {}
        with open(self.index_path, "r", encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    entry = IndexEntry.model_validate_json(line)
                except ValidationError as e:
                    raise ValueError(f"{self.index_path}:{number}: invalid index entry: {e}")
                entries[entry.name] = entry
        return entries

    def _load_entry(self, entry: IndexEntry) -> CodeRecord:
        path = self.db_path / entry.file
        if not path.exists():
            raise LookupError(f"Generator file missing: {path}")
        code = LinearCode(BitMatrix.read_g2m(path))
        params = code.params()
        stored = (entry.n, entry.k, entry.d, entry.hull)
        found = (params.n, params.k, params.d, params.hull_dim)
        if stored != found:
            raise ValueError(f"Record {entry.name} stores {stored} but its generator gives {found}")
        return CodeRecord(
            entry.name,
            CodeParams(params.n, params.k, params.d, params.hull_dim, params.weight_distribution),
            code.generator,
            entry.provenance,
            seed=entry.seed,
            notes=entry.notes,
        )

    def get(self, n: int, k: int) -> Tuple[bool, Optional[str], Optional[CodeRecord]]:
        """
        Load and re-verify one record

        Returns:
            (success, error message, record)
        """
        name = f"n{n}_k{k}"
        entry = self.entries().get(name)
        if entry is None:
            return False, f"Record {name} not in database {self.db_path} (run seed-db)", None
        try:
            return True, None, self._load_entry(entry)
        except (LookupError, ValueError) as e:
            self.logger.error(f"Loading {name} failed: {str(e)}")
            return False, str(e), None

    def small_lcd_db(self, n: int, k: int) -> CodeRecord:
        """
        Verified LCD record [n, k] from the database

        Raises:
            ValueError: (n, k) outside the supported ranges, or the record fails verification
            LookupError: the database has no such record
        """
        if k not in SUPPORTED_RANGES or n not in SUPPORTED_RANGES[k]:
            raise ValueError(f"No database records for [{n}, {k}]")
        entry = self.entries().get(f"n{n}_k{k}")
        if entry is None:
            raise LookupError(f"Record n{n}_k{k} not in database {self.db_path} (run seed-db)")
        record = self._load_entry(entry)
        if record.params.hull_dim != 0:
            raise ValueError(f"Record {record.name} is not LCD (hull {record.params.hull_dim})")
        return record

    def records(self) -> Dict[Tuple[int, int], CodeRecord]:
        """Every record that passes re-verification, keyed by (n, k)."""
        loaded: Dict[Tuple[int, int], CodeRecord] = {}
        for entry in self.entries().values():
            try:
                loaded[(entry.n, entry.k)] = self._load_entry(entry)
            except (LookupError, ValueError) as e:
                self.logger.error(f"Skipping {entry.name}: {str(e)}")
        return loaded

    def save_report(self, report: List[Dict], filename: str = "seed_report.json") -> Path:
        path = self.db_path / filename
        self.db_path.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(report, f, indent=2, ensure_ascii=False)
        return path
