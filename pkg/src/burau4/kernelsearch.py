"""Exhaustive search for scalar products ``T_bar^2 D T_bar^i1 D ... T_bar^ik D T_bar^2``.

Any exponent sequence whose product is ``t^(4m) I`` gives a braid
``theta^-m tau^2 Delta ... Delta tau^2`` in the kernel of the Burau map;
unless that braid is trivial the representation is unfaithful.

Factor order: ``word_matrix((i1, ..., ik))`` multiplies the matrices in the
order written above.  Under the reversed-product evaluation rule this is the
Burau image of the braid ``tau^2 Delta tau^ik ... Delta tau^i1 Delta tau^2``,
i.e. the exponent sequence read backwards.  :func:`kernel_braid` applies
that reversal.

Determinant bookkeeping: ``det T_bar = -t^3`` and ``det D = t^6``, so the
product for a sequence of length ``k`` and exponent sum ``s`` has determinant
``(-1)^s t^(3(s + 2k + 6))``.  A scalar product ``c I`` therefore has
``c = (-1)^s t^(s + 2k + 6)``, and it is of the form ``t^(4m) I`` only when
``s`` is even and ``s + 2k + 6`` is divisible by 4, in which case
``m = (s + 2k + 6) / 4``.  Sequences failing that test are classified
without forming the full product.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .braid import BraidWord, braid_eq
from .burau import D, T_BAR, burau_eval
from .matrix3 import IDENTITY, Mat3, ProjKey, canonicalize
from .normalform import DSYL, expand_syllables

log = logging.getLogger(__name__)

__all__ = [
    "NONSCALAR",
    "SCALAR_HIT",
    "SCALAR_OFFCENTER",
    "SearchConfig",
    "SearchRecord",
    "SearchSummary",
    "Certificate",
    "CheckpointCorrupt",
    "word_matrix",
    "level_products",
    "kernel_braid",
    "classify",
    "search",
    "verify_hit",
    "iter_sequences",
    "count_sequences",
]

NONSCALAR = "nonscalar"
SCALAR_HIT = "scalar_hit"
SCALAR_OFFCENTER = "scalar_offcenter"

TRIVIAL = "trivial braid"
NONTRIVIAL = "NONTRIVIAL KERNEL ELEMENT"
REJECTED = "rejected"

_TBAR2 = T_BAR**2
_HEAD = _TBAR2 * D
_STEP = {i: (T_BAR**i) * D for i in (1, 2, 3)}


class CheckpointCorrupt(ValueError):
    """Checkpoint file is unreadable or fails its checksum."""


@dataclass(frozen=True)
class SearchConfig:
    max_k: int
    dedup: bool = False
    workers: int = 1
    checkpoint_path: Optional[Path] = None
    out_path: Optional[Path] = None
    prune: bool = True
    plant: Tuple[Tuple[int, ...], ...] = ()
    checkpoint_every: int = 10_000
    chunk_size: int = 2_000

    def __post_init__(self):
        if self.max_k < 0:
            raise ValueError("max_k must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SearchRecord:
    exps: Tuple[int, ...]
    status: str
    m: Optional[int] = None
    proj_key_id: Optional[int] = None
    planted: bool = False

    @property
    def k(self) -> int:
        return len(self.exps)

    def line(self) -> str:
        return "\t".join(
            [
                str(self.k),
                "".join(map(str, self.exps)) or "-",
                self.status + (" (planted)" if self.planted else ""),
                "-" if self.m is None else str(self.m),
                "-" if self.proj_key_id is None else str(self.proj_key_id),
            ]
        )


@dataclass(frozen=True)
class Certificate:
    exps: Tuple[int, ...]
    m: int
    verdict: str
    braid: BraidWord
    detail: str

    @property
    def nontrivial(self) -> bool:
        return self.verdict == NONTRIVIAL

    def report(self) -> str:
        lines = [
            f"verdict: {self.verdict}",
            f"exponents: {list(self.exps)}  m: {self.m}",
            f"braid ({len(self.braid)} letters): {self.braid}",
            self.detail,
        ]
        if self.nontrivial:
            bar = "!" * 72
            lines = [bar, "BURAU KERNEL ELEMENT FOUND (B4)"] + lines + [bar]
        return "\n".join(lines)


@dataclass
class SearchSummary:
    max_k: int
    per_k: Dict[int, int] = field(default_factory=dict)
    hits: List[SearchRecord] = field(default_factory=list)
    offcenter: List[SearchRecord] = field(default_factory=list)
    certificates: List[Certificate] = field(default_factory=list)
    pruned: int = 0
    classes: Optional[int] = None
    collisions: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)
    planted: int = 0
    resumed_from: Optional[Tuple[int, int]] = None
    elapsed: float = 0.0
    halted: bool = False
    records: Optional[List[SearchRecord]] = None

    @property
    def total(self) -> int:
        return sum(self.per_k.values())

    @property
    def discovery(self) -> Optional[Certificate]:
        return next((c for c in self.certificates if c.nontrivial), None)

    def report(self) -> str:
        lines = ["# summary"]
        for k in sorted(self.per_k):
            lines.append(f"# k={k}\t{self.per_k[k]} sequences")
        lines.append(f"# total sequences: {self.total}")
        if self.planted:
            lines.append(f"# planted controls: {self.planted}")
        lines.append(f"# scalar hits: {len(self.hits)}")
        lines.append(f"# off-centre scalars: {len(self.offcenter)}")
        lines.append(f"# classified by determinant alone: {self.pruned}")
        if self.classes is not None:
            lines.append(f"# projective classes: {self.classes}")
            lines.append(f"# projective collisions: {len(self.collisions)}")
            for a, b in self.collisions:
                lines.append(f"#   {''.join(map(str, a)) or '-'} ~ {''.join(map(str, b)) or '-'}")
        if self.resumed_from is not None:
            lines.append(f"# resumed at k={self.resumed_from[0]} index={self.resumed_from[1]}")
        for c in self.certificates:
            lines.append(f"# hit {''.join(map(str, c.exps)) or '-'} m={c.m}: {c.verdict}")
        lines.append(f"# wall time: {self.elapsed:.2f} s")
        if self.halted:
            lines.append("# HALTED: nontrivial kernel element, see certificate")
        return "\n".join(lines)


# -- products ----------------------------------------------------------------


def word_matrix(exps: Sequence[int]) -> Mat3:
    """``T_bar^2 D T_bar^i1 D ... T_bar^ik D T_bar^2`` computed from scratch.

    Exponents outside 1..3 are allowed (planted controls use them) as long as
    they are nonnegative.
    """
    m = _HEAD
    for i in exps:
        if i < 0:
            raise ValueError("tau exponents must be nonnegative")
        m = m * (T_BAR**i) * D
    return m * _TBAR2


def kernel_braid(exps: Sequence[int], m: int) -> BraidWord:
    """Braid ``theta^-m tau^2 Delta tau^ik ... Delta tau^i1 Delta tau^2``.

    Its Burau image is ``t^(-4m) word_matrix(exps)``.
    """
    syl = [2, DSYL]
    for i in reversed(exps):
        syl += [i, DSYL]
    syl.append(2)
    return expand_syllables(-m, syl)


def scalar_exponent(exps: Sequence[int]) -> Tuple[int, int]:
    """``(sign, e)`` such that any scalar product equals ``sign * t^e * I``."""
    s = sum(exps)
    return (-1 if s % 2 else 1), s + 2 * len(exps) + 6


def classify(exps: Sequence[int], prefix: Mat3, prune: bool = True) -> Tuple[str, Optional[int], bool]:
    """Classify a sequence from its cached prefix ``T_bar^2 D ... T_bar^ik D``.

    Returns ``(status, m, decided_by_determinant)``.
    """
    sign, e = scalar_exponent(exps)
    compatible = sign == 1 and e % 4 == 0
    if prune and not compatible:
        return NONSCALAR, None, True
    c = (prefix * _TBAR2).as_scalar()
    if c is None:
        return NONSCALAR, None, False
    if c.is_unit_monomial() == (1, e) and e % 4 == 0:
        return SCALAR_HIT, e // 4, False
    return SCALAR_OFFCENTER, None, False


def count_sequences(max_k: int) -> int:
    return sum(3**k for k in range(max_k + 1))


def iter_sequences(max_k: int) -> Iterator[Tuple[int, ...]]:
    """All exponent sequences, by length then lexicographically."""
    for k in range(max_k + 1):
        yield from itertools.product((1, 2, 3), repeat=k)


# -- hit verification --------------------------------------------------------


def verify_hit(exps: Sequence[int], m: int) -> Certificate:
    """Independently certify a scalar hit.

    Rebuilds the braid ``theta^-m tau^2 Delta ... tau^2``, evaluates its Burau
    image letter by letter and, if that is the identity, decides triviality
    with the Artin-action oracle.
    """
    exps = tuple(exps)
    braid = kernel_braid(exps, m)
    image = burau_eval(braid)
    if image != IDENTITY:
        return Certificate(exps, m, REJECTED, braid, f"Burau image is not I: {image}")
    if braid_eq(braid, BraidWord()):
        return Certificate(exps, m, TRIVIAL, braid, "Burau image is I and the braid is trivial")
    return Certificate(
        exps, m, NONTRIVIAL, braid, "Burau image is I but the braid acts nontrivially on F4"
    )


# -- checkpoints -------------------------------------------------------------

_CK_MAGIC = "# burau4 search checkpoint v1"


@dataclass
class _Checkpoint:
    max_k: int
    dedup: bool
    prune: bool
    next_k: int
    next_index: int
    out_bytes: int
    pruned: int
    hits: List[Tuple[Tuple[int, ...], int]]
    offcenter: List[Tuple[int, ...]]

    def body(self) -> str:
        lines = [
            f"max_k {self.max_k}",
            f"dedup {int(self.dedup)}",
            f"prune {int(self.prune)}",
            f"next_k {self.next_k}",
            f"next_index {self.next_index}",
            f"out_bytes {self.out_bytes}",
            f"pruned {self.pruned}",
        ]
        lines += [f"hit {''.join(map(str, e)) or '-'} {m}" for e, m in self.hits]
        lines += [f"offcenter {''.join(map(str, e)) or '-'}" for e in self.offcenter]
        return "\n".join(lines) + "\n"


def _write_checkpoint(path: Path, ck: _Checkpoint) -> None:
    body = ck.body()
    digest = hashlib.sha256(body.encode()).hexdigest()
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(f"{_CK_MAGIC}\n# sha256 {digest}\n{body}")
    os.replace(tmp, path)


def _seq(text: str) -> Tuple[int, ...]:
    return () if text == "-" else tuple(int(c) for c in text)


def _read_checkpoint(path: Path) -> _Checkpoint:
    """Parse a checkpoint file; any defect raises :class:`CheckpointCorrupt`."""
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise CheckpointCorrupt(f"cannot read checkpoint {path}: {exc}") from exc
    lines = text.split("\n", 2)
    if len(lines) < 3 or lines[0] != _CK_MAGIC or not lines[1].startswith("# sha256 "):
        raise CheckpointCorrupt(f"{path}: bad header")
    body = lines[2]
    if hashlib.sha256(body.encode()).hexdigest() != lines[1][len("# sha256 ") :].strip():
        raise CheckpointCorrupt(f"{path}: checksum mismatch")
    fields: Dict[str, str] = {}
    hits, offcenter = [], []
    try:
        for ln in body.splitlines():
            key, _, val = ln.partition(" ")
            if key == "hit":
                e, m = val.split()
                hits.append((_seq(e), int(m)))
            elif key == "offcenter":
                offcenter.append(_seq(val.strip()))
            else:
                fields[key] = val
        return _Checkpoint(
            max_k=int(fields["max_k"]),
            dedup=bool(int(fields["dedup"])),
            prune=bool(int(fields["prune"])),
            next_k=int(fields["next_k"]),
            next_index=int(fields["next_index"]),
            out_bytes=int(fields["out_bytes"]),
            pruned=int(fields["pruned"]),
            hits=hits,
            offcenter=offcenter,
        )
    except (KeyError, ValueError) as exc:
        raise CheckpointCorrupt(f"{path}: malformed field ({exc})") from exc


# -- enumeration -------------------------------------------------------------


def _process_chunk(args):
    """Worker task: classify a run of sequences and extend them by one step."""
    items, classify_from, extend, prune, dedup = args
    results = []
    children = []
    for idx, (exps, q) in enumerate(items):
        if idx >= classify_from:
            status, m, by_det = classify(exps, q, prune)
        else:
            status, m, by_det = None, None, False
        key = canonicalize(q) if dedup else None
        results.append((status, m, by_det, key))
        if extend:
            for i in (1, 2, 3):
                children.append((exps + (i,), q * _STEP[i]))
    return results, children


def level_products(k: int) -> List[Tuple[Tuple[int, ...], Mat3]]:
    """Cached prefixes ``T_bar^2 D T_bar^i1 D ... T_bar^ik D`` for every length-``k``
    sequence, extended one step at a time exactly as :func:`search` does."""
    level = [((), _HEAD)]
    for _ in range(k):
        _, level = _process_chunk((level, len(level), True, True, False))
    return level


def search(
    cfg: SearchConfig,
    on_record: Optional[Callable[[SearchRecord], None]] = None,
) -> SearchSummary:
    """Enumerate every sequence with ``0 <= k <= cfg.max_k`` and classify it.

    Records are passed to ``on_record`` in (k, lexicographic) order, written
    to ``cfg.out_path`` when set, and otherwise collected in
    ``summary.records``.  A scalar hit is verified on the spot; a nontrivial
    certificate stops the run (``summary.halted``).

    With ``cfg.checkpoint_path`` set, an existing checkpoint is resumed and
    progress is saved every ``cfg.checkpoint_every`` sequences.  Resuming
    recomputes the cached prefix products of earlier levels but does not
    re-emit their records.
    """
    start = time.perf_counter()
    summary = SearchSummary(max_k=cfg.max_k)
    if on_record is None and cfg.out_path is None:
        summary.records = []

    resume = None
    if cfg.checkpoint_path is not None and Path(cfg.checkpoint_path).exists():
        resume = _read_checkpoint(Path(cfg.checkpoint_path))
        if resume.dedup != cfg.dedup or resume.prune != cfg.prune:
            raise ValueError("checkpoint was written with different dedup/prune settings")
        summary.resumed_from = (resume.next_k, resume.next_index)
        summary.pruned = resume.pruned
        summary.hits = [SearchRecord(e, SCALAR_HIT, m) for e, m in resume.hits]
        summary.offcenter = [SearchRecord(e, SCALAR_OFFCENTER) for e in resume.offcenter]
        log.info("resuming at k=%d index=%d", resume.next_k, resume.next_index)

    out = None
    if cfg.out_path is not None:
        if resume is not None and Path(cfg.out_path).exists():
            out = open(cfg.out_path, "r+")
            out.truncate(resume.out_bytes)
            out.seek(resume.out_bytes)
        else:
            out = open(cfg.out_path, "w")

    done_k, done_index = (resume.next_k, resume.next_index) if resume else (0, 0)
    key_ids: Dict[ProjKey, int] = {}
    first_of_class: List[Tuple[int, ...]] = []
    since_ck = 0
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None

    def emit(rec: SearchRecord) -> None:
        if summary.records is not None:
            summary.records.append(rec)
        if on_record is not None:
            on_record(rec)
        if out is not None:
            out.write(rec.line() + "\n")

    def save(next_k: int, next_index: int) -> None:
        if cfg.checkpoint_path is None:
            return
        if out is not None:
            out.flush()
        _write_checkpoint(
            Path(cfg.checkpoint_path),
            _Checkpoint(
                max_k=cfg.max_k,
                dedup=cfg.dedup,
                prune=cfg.prune,
                next_k=next_k,
                next_index=next_index,
                out_bytes=out.tell() if out is not None else 0,
                pruned=summary.pruned,
                hits=[(r.exps, r.m) for r in summary.hits],
                offcenter=[r.exps for r in summary.offcenter],
            ),
        )

    try:
        level: List[Tuple[Tuple[int, ...], Mat3]] = [((), _HEAD)]
        for k in range(cfg.max_k + 1):
            if k < done_k:
                skip = len(level)
            elif k == done_k:
                skip = done_index
            else:
                skip = 0
            extend = k < cfg.max_k
            if skip >= len(level) and not extend and not cfg.dedup:
                summary.per_k[k] = len(level)
                continue
            tasks = []
            for lo in range(0, len(level), cfg.chunk_size):
                chunk = level[lo : lo + cfg.chunk_size]
                tasks.append((chunk, max(0, skip - lo), extend, cfg.prune, cfg.dedup))
            results = pool.map(_process_chunk, tasks) if pool else map(_process_chunk, tasks)
            next_level: List[Tuple[Tuple[int, ...], Mat3]] = []
            index = 0
            for (chunk, *_), (res, children) in zip(tasks, results):
                next_level.extend(children)
                for (exps, _q), (status, m, by_det, key) in zip(chunk, res):
                    class_id = None
                    if key is not None:
                        class_id = key_ids.get(key)
                        if class_id is None:
                            class_id = key_ids[key] = len(first_of_class)
                            first_of_class.append(exps)
                        else:
                            summary.collisions.append((first_of_class[class_id], exps))
                            log.warning("projective collision: %s ~ %s", first_of_class[class_id], exps)
                    if status is not None:
                        summary.pruned += by_det
                        rec = SearchRecord(exps, status, m, class_id)
                        emit(rec)
                        if status == SCALAR_HIT:
                            summary.hits.append(rec)
                            cert = verify_hit(exps, m)
                            summary.certificates.append(cert)
                            if cert.nontrivial:
                                log.critical("%s", cert.report())
                                summary.halted = True
                        elif status == SCALAR_OFFCENTER:
                            summary.offcenter.append(rec)
                            log.warning("scalar product not of the form t^(4m) I: %s", exps)
                    index += 1
                    since_ck += status is not None
                    if summary.halted:
                        break
                if summary.halted:
                    save(k, index)
                    break
                if since_ck >= cfg.checkpoint_every:
                    save(k, index)
                    since_ck = 0
            summary.per_k[k] = index
            if summary.halted:
                break
            save(k + 1, 0)
            level = next_level

        if not summary.halted:
            for exps in cfg.plant:
                exps = tuple(exps)
                p = word_matrix(exps)
                c = p.as_scalar()
                sign, e = scalar_exponent(exps)
                if c is not None and c.is_unit_monomial() == (1, e) and e % 4 == 0:
                    rec = SearchRecord(exps, SCALAR_HIT, e // 4, planted=True)
                    cert = verify_hit(exps, e // 4)
                    summary.hits.append(rec)
                    summary.certificates.append(cert)
                    summary.halted = cert.nontrivial
                elif c is not None:
                    rec = SearchRecord(exps, SCALAR_OFFCENTER, planted=True)
                    summary.offcenter.append(rec)
                else:
                    rec = SearchRecord(exps, NONSCALAR, planted=True)
                summary.planted += 1
                emit(rec)
    finally:
        if pool is not None:
            pool.shutdown()
        if out is not None:
            out.close()

    if cfg.dedup:
        summary.classes = len(first_of_class)
    summary.elapsed = time.perf_counter() - start
    return summary
