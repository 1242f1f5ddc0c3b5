"""Loading and parsing of the bundled data tables.

All tables are line-oriented text with `|`-separated fields and `#` comments.
Record grammars are documented next to each parser; `parse -> serialize`
round-trips to the canonical form (tested).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .arith import DegreePolynomial
from .errors import DataFileMalformed, DataFileMissing

ENV_DATA_DIR = "MCKAYV_DATA_DIR"

SP6_FILES = {
    "chartable": "sp6_chartable.txt",
    "blocks": "sp6_blocks.txt",
    "brauer": "sp6_brauer.txt",
    "maps": "sp6_maps.txt",
}
SP4_FILES = {
    "chartable": "sp4_chartable.txt",
    "blocks": "sp4_blocks.txt",
    "brauer": "sp4_brauer.txt",
    "maps": "sp4_maps.txt",
}


def data_path(name: str, data_dir: str | None = None) -> Path:
    if data_dir is None:
        data_dir = os.environ.get(ENV_DATA_DIR)
    if data_dir is not None:
        p = Path(data_dir) / name
        if not p.exists():
            raise DataFileMissing(str(p))
        return p
    ref = resources.files("mckayv.data").joinpath(name)
    with resources.as_file(ref) as p:
        if not p.exists():
            raise DataFileMissing(name)
        return Path(p)


def read_records(path: Path) -> list[tuple[int, list[str]]]:
    """Yield (lineno, fields) for every non-comment line."""
    out = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        out.append((lineno, [f.strip() for f in line.split("|")]))
    return out


# --- slot specifications -----------------------------------------------------

# a slot group: (kind, multiplicity, starred); kind is one of a..f


def parse_slots(text: str, path="<slots>", lineno=0) -> tuple[tuple[str, int, bool], ...]:
    if text == "-":
        return ()
    groups = []
    for tok in text.split():
        starred = tok.endswith("*")
        if starred:
            tok = tok[:-1]
        kind, mult = tok[0], tok[1:]
        if kind not in "abcdef":
            raise DataFileMalformed(path, lineno, f"bad slot kind {tok!r}")
        k = int(mult) if mult else 1
        if starred and k < 2:
            raise DataFileMalformed(path, lineno, f"starred group needs k >= 2: {tok!r}")
        groups.append((kind, k, starred))
    return tuple(groups)


def slots_to_text(groups) -> str:
    if not groups:
        return "-"
    toks = []
    for kind, k, starred in groups:
        toks.append(kind + (str(k) if k > 1 else "") + ("*" if starred else ""))
    return " ".join(toks)


# --- character table ---------------------------------------------------------


@dataclass(frozen=True)
class CharFamily:
    fam: int
    slots: tuple[tuple[str, int, bool], ...]  # groups (kind, k, starred)
    degree: DegreePolynomial
    series: int

    @property
    def arity(self) -> int:
        return sum(k for _, k, _ in self.slots)


def parse_chartable(path: Path) -> dict[int, CharFamily]:
    families: dict[int, CharFamily] = {}
    for lineno, fields in read_records(path):
        if len(fields) != 4:
            raise DataFileMalformed(path, lineno, "expected 4 fields")
        fam = int(fields[0])
        slots = parse_slots(fields[1], path, lineno)
        ctext = fields[2]
        den = 1
        if ctext.endswith("/2"):
            den = 2
            ctext = ctext[:-2]
        coeffs = tuple(int(c) for c in ctext.split(","))
        series = int(fields[3])
        if fam in families:
            raise DataFileMalformed(path, lineno, f"duplicate family {fam}")
        families[fam] = CharFamily(fam, slots, DegreePolynomial(coeffs, den), series)
    return families


def serialize_chartable(families: dict[int, CharFamily]) -> str:
    lines = []
    for fam in sorted(families):
        f = families[fam]
        ctext = ",".join(str(c) for c in f.degree.coeffs)
        if f.degree.den == 2:
            ctext += "/2"
        lines.append(f"{f.fam} | {slots_to_text(f.slots)} | {ctext} | {f.series}")
    return "\n".join(lines) + "\n"


# --- block rules -------------------------------------------------------------

# atoms of a congruence pattern
A_ZERO = "zero"  # slot index trivial mod the kind's ell'-modulus
A_EQ = "eq"  # slot class equals block parameter k
A_CONG = "cong"  # slot orbit meets mult * (parameter orbit) mod ell'-modulus

MULT_TOKENS = {"q-1", "q+1", "q2+q+1", "q2-q+1"}


@dataclass(frozen=True)
class Atom:
    op: str
    param: int = 0  # 1-based parameter index
    mult: str | None = None  # multiplier token, evaluated at q

    def text(self) -> str:
        if self.op == A_ZERO:
            return "~0"
        if self.op == A_EQ:
            return f"={self.param}"
        return f"~{self.param}" + (f"*({self.mult})" if self.mult else "")


def _parse_atom(tok: str, path, lineno) -> Atom:
    tok = tok.strip()
    if tok == "~0":
        return Atom(A_ZERO)
    if tok.startswith("="):
        return Atom(A_EQ, int(tok[1:]))
    if tok.startswith("~"):
        body = tok[1:]
        if "*" in body:
            num, mult = body.split("*", 1)
            mult = mult.strip("()")
            if mult not in MULT_TOKENS:
                raise DataFileMalformed(path, lineno, f"bad multiplier {mult!r}")
            return Atom(A_CONG, int(num), mult)
        return Atom(A_CONG, int(body))
    raise DataFileMalformed(path, lineno, f"bad atom {tok!r}")


def parse_pattern(text: str, path="<pattern>", lineno=0):
    """Group patterns, one per slot group: a single atom, an ordered tuple
    `(x,y)`, or an unordered multiset `{x,y}`."""
    groups = []
    depth = 0
    cur = ""
    parts = []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    for part in (p.strip() for p in parts):
        if part.startswith("{") and part.endswith("}"):
            atoms = tuple(_parse_atom(t, path, lineno) for t in part[1:-1].split(","))
            groups.append(("set", atoms))
        elif part.startswith("(") and part.endswith(")"):
            atoms = tuple(_parse_atom(t, path, lineno) for t in part[1:-1].split(","))
            groups.append(("seq", atoms))
        else:
            groups.append(("seq", (_parse_atom(part, path, lineno),)))
    return tuple(groups)


def pattern_to_text(pattern) -> str:
    out = []
    for mode, atoms in pattern:
        if len(atoms) == 1 and mode == "seq":
            out.append(atoms[0].text())
        elif mode == "set":
            out.append("{" + ",".join(a.text() for a in atoms) + "}")
        else:
            out.append("(" + ",".join(a.text() for a in atoms) + ")")
    return ",".join(out)


@dataclass(frozen=True)
class ParamSpec:
    kind: str
    lconstrained: bool  # index must be divisible by the kind's ell-part

    def text(self) -> str:
        return self.kind + ("!" if self.lconstrained else "")


def parse_params(text: str, path, lineno):
    """Parameter groups: bare tokens are single ordered slots, `{..}` is an
    unordered group."""
    if text == "-":
        return ()
    groups = []
    i = 0
    toks = text.split()
    while i < len(toks):
        tok = toks[i]
        if tok.startswith("{"):
            inner = [tok[1:]]
            while not toks[i].endswith("}"):
                i += 1
                inner.append(toks[i])
            inner[-1] = inner[-1][:-1]
            specs = tuple(ParamSpec(t.rstrip("!"), t.endswith("!")) for t in inner)
            if len({s.kind for s in specs}) != 1:
                raise DataFileMalformed(path, lineno, "mixed kinds in unordered group")
            groups.append(("set", specs))
        else:
            groups.append(("seq", (ParamSpec(tok.rstrip("!"), tok.endswith("!")),)))
        i += 1
    return tuple(groups)


def params_to_text(groups) -> str:
    if not groups:
        return "-"
    out = []
    for mode, specs in groups:
        if mode == "set":
            out.append("{" + " ".join(s.text() for s in specs) + "}")
        else:
            out.append(specs[0].text())
    return " ".join(out)


@dataclass(frozen=True)
class ShapeSpec:
    """Centralizer shape: Sp_{m0}(q) x prod GU_{m}(q^{d/2}) x prod GL_{n}(q^k)."""

    m0: int = 0
    unitary: tuple[tuple[int, int], ...] = ()  # (m, d) with d even
    linear: tuple[tuple[int, int], ...] = ()  # (n, k)

    def text(self) -> str:
        toks = []
        if self.m0:
            toks.append(f"m0={self.m0}")
        toks += [f"U({m},{d})" for m, d in self.unitary]
        toks += [f"L({n},{k})" for n, k in self.linear]
        return " ".join(toks) if toks else "-"


def parse_shape(text: str, path, lineno) -> ShapeSpec:
    m0 = 0
    unitary = []
    linear = []
    if text != "-":
        for tok in text.split():
            if tok.startswith("m0="):
                m0 = int(tok[3:])
            elif tok.startswith("U(") and tok.endswith(")"):
                m, d = (int(x) for x in tok[2:-1].split(","))
                unitary.append((m, d))
            elif tok.startswith("L(") and tok.endswith(")"):
                n, k = (int(x) for x in tok[2:-1].split(","))
                linear.append((n, k))
            else:
                raise DataFileMalformed(path, lineno, f"bad shape token {tok!r}")
    return ShapeSpec(m0, tuple(unitary), tuple(linear))


@dataclass
class BlockFamily:
    name: str  # e.g. B6.0, B24.1, B9
    regime: str  # e+ e- c2 c3+ c3-
    cond: str  # any / l3 / not3
    params: tuple  # parameter groups
    shape: ShapeSpec
    rules: list = field(default_factory=list)  # (family, cond, pattern)


@dataclass
class BucketRule:
    regime: str
    block: str  # B0 or B1
    shape: ShapeSpec
    unip: tuple[int, ...]  # explicit unipotent members
    extra: tuple[tuple[int, object], ...]  # (family, pattern) with trivial slots
    rest: bool  # catch-all for the remaining union members


@dataclass
class BlockData:
    families: dict[tuple[str, str], BlockFamily]  # (name, regime) -> family
    buckets: list[BucketRule]

    def for_regime(self, branch: str, is3: bool) -> list[BlockFamily]:
        out = []
        for (_, reg), bf in sorted(self.families.items()):
            if reg != branch:
                continue
            if bf.cond == "l3" and not is3:
                continue
            if bf.cond == "not3" and is3:
                continue
            out.append(bf)
        return out


def parse_blocks(path: Path) -> BlockData:
    families: dict[tuple[str, str], BlockFamily] = {}
    buckets: list[BucketRule] = []
    for lineno, fields in read_records(path):
        tag = fields[0].split()[0]
        if tag == "block":
            if len(fields) != 5:
                raise DataFileMalformed(path, lineno, "block line needs 5 fields")
            name = fields[0].split()[1]
            regime, cond = fields[1], fields[2]
            params = parse_params(fields[3], path, lineno)
            shape = parse_shape(fields[4], path, lineno)
            key = (name, regime)
            if key in families:
                raise DataFileMalformed(path, lineno, f"duplicate block {key}")
            families[key] = BlockFamily(name, regime, cond, params, shape)
        elif tag == "rule":
            if len(fields) != 5:
                raise DataFileMalformed(path, lineno, "rule line needs 5 fields")
            name = fields[0].split()[1]
            regime, cond = fields[1], fields[2]
            fam = int(fields[3])
            pattern = parse_pattern(fields[4], path, lineno)
            key = (name, regime)
            if key not in families:
                raise DataFileMalformed(path, lineno, f"rule for unknown block {key}")
            families[key].rules.append((fam, cond, pattern))
        elif tag == "ubucket":
            regime = fields[0].split()[1]
            block = fields[1]
            shape = parse_shape(fields[2], path, lineno)
            unip: tuple[int, ...] = ()
            extra = []
            rest = False
            for f in fields[3:]:
                if f.startswith("unip"):
                    unip = tuple(int(x) for x in f[4:].replace(",", " ").split())
                elif f.startswith("extra"):
                    toks = f.split(None, 2)
                    extra.append((int(toks[1]), parse_pattern(toks[2], path, lineno)))
                elif f == "rest":
                    rest = True
                else:
                    raise DataFileMalformed(path, lineno, f"bad bucket field {f!r}")
            buckets.append(BucketRule(regime, block, shape, unip, tuple(extra), rest))
        else:
            raise DataFileMalformed(path, lineno, f"unknown record {tag!r}")
    return BlockData(families, buckets)


def serialize_blocks(data: BlockData) -> str:
    lines = []
    for (name, regime), bf in sorted(data.families.items()):
        lines.append(
            f"block {name} | {regime} | {bf.cond} | "
            f"{params_to_text(bf.params)} | {bf.shape.text()}"
        )
        for fam, cond, pattern in bf.rules:
            lines.append(f"rule {name} | {regime} | {cond} | {fam} | {pattern_to_text(pattern)}")
    for b in data.buckets:
        parts = [f"ubucket {b.regime}", b.block, b.shape.text()]
        if b.unip:
            parts.append("unip " + ",".join(str(x) for x in b.unip))
        for fam, pattern in b.extra:
            parts.append(f"extra {fam} {pattern_to_text(pattern)}")
        if b.rest:
            parts.append("rest")
        lines.append(" | ".join(parts))
    return "\n".join(lines) + "\n"


# --- Brauer character data ---------------------------------------------------


@dataclass(frozen=True)
class BrauerRow:
    fam: int
    conds: tuple[str, ...]  # subset of P M Pn3 P3 Mn3 M3 C2 C3P C3M
    blocks: tuple[tuple[tuple[tuple[object, int], ...], ...], ...]
    # blocks -> virtual chars -> terms (coef, family); coef is int or "a"


def _parse_virtual(text: str, path, lineno):
    terms = []
    tok = ""
    for ch in text.replace(" ", "") + "+":
        if ch in "+-" and tok:
            sign = 1
            body = tok
            if body[0] == "-":
                sign, body = -1, body[1:]
            elif body[0] == "+":
                body = body[1:]
            if "*" in body:
                c, f = body.split("*")
                coef = "a" if c == "a" else sign * int(c)
                if coef == "a" and sign < 0:
                    coef = "-a"
                terms.append((coef, int(f)))
            else:
                terms.append((sign, int(body)))
            tok = ch if ch == "-" else ""
        else:
            tok += ch
    if not terms:
        raise DataFileMalformed(path, lineno, f"empty virtual character {text!r}")
    return tuple(terms)


def parse_brauer(path: Path) -> list[BrauerRow]:
    rows = []
    for lineno, fields in read_records(path):
        if len(fields) < 3:
            raise DataFileMalformed(path, lineno, "expected fam | conds | blocks")
        fam = int(fields[0])
        conds = tuple(fields[1].replace(",", " ").split())
        blocks = []
        for btext in " | ".join(fields[2:]).split(";"):
            vcs = tuple(
                _parse_virtual(v.strip(), path, lineno) for v in btext.split("|") if v.strip()
            )
            if vcs:
                blocks.append(vcs)
        rows.append(BrauerRow(fam, conds, tuple(blocks)))
    return rows


def _term_text(coef, fam) -> str:
    if coef == 1:
        return f"+{fam}"
    if coef == -1:
        return f"-{fam}"
    if coef == "a":
        return f"+a*{fam}"
    if coef == "-a":
        return f"-a*{fam}"
    return f"{coef:+d}*{fam}"


def serialize_brauer(rows: list[BrauerRow]) -> str:
    lines = []
    for r in rows:
        blocks = []
        for vcs in r.blocks:
            vtexts = []
            for terms in vcs:
                t = "".join(_term_text(c, f) for c, f in terms).lstrip("+")
                vtexts.append(t)
            blocks.append(" | ".join(vtexts))
        lines.append(f"{r.fam} | {','.join(r.conds)} | {' ; '.join(blocks)}")
    return "\n".join(lines) + "\n"


# --- map tables ----------------------------------------------------------------


@dataclass(frozen=True)
class MapLine:
    radical: str
    kind: str  # omega / star
    regime: str  # e+ e- c2 c3+ c3-
    cond: str  # any / l3 / not3
    varspec: tuple  # ((names), kind, k, starred) groups
    constraints: tuple[str, ...]
    domain: str
    target: str
    tag: str


def parse_varspec(text: str, path, lineno):
    if text == "-":
        return ()
    groups = []
    for tok in text.split():
        names, spec = tok.split(":")
        names = tuple(names.strip("()").split(","))
        starred = spec.endswith("*")
        if starred:
            spec = spec[:-1]
        kind, mult = spec[0], spec[1:]
        k = int(mult) if mult else 1
        if len(names) != k:
            raise DataFileMalformed(path, lineno, f"var arity mismatch in {tok!r}")
        groups.append((names, kind, k, starred))
    return tuple(groups)


def varspec_to_text(groups) -> str:
    if not groups:
        return "-"
    out = []
    for names, kind, k, starred in groups:
        nm = names[0] if k == 1 else "(" + ",".join(names) + ")"
        out.append(f"{nm}:{kind}{k if k > 1 else ''}{'*' if starred else ''}")
    return " ".join(out)


def parse_maps(path: Path) -> list[MapLine]:
    lines = []
    for lineno, fields in read_records(path):
        if len(fields) != 9:
            raise DataFileMalformed(path, lineno, "map line needs 9 fields")
        rad, kind, regime, cond = fields[0], fields[1], fields[2], fields[3]
        varspec = parse_varspec(fields[4], path, lineno)
        constraints = tuple(fields[5].split(";")) if fields[5] != "-" else ()
        constraints = tuple(c.strip() for c in constraints if c.strip())
        lines.append(
            MapLine(rad, kind, regime, cond, varspec, constraints, fields[6], fields[7], fields[8])
        )
    return lines


def serialize_maps(lines: list[MapLine]) -> str:
    out = []
    for ln in lines:
        cons = "; ".join(ln.constraints) if ln.constraints else "-"
        out.append(
            f"{ln.radical} | {ln.kind} | {ln.regime} | {ln.cond} | "
            f"{varspec_to_text(ln.varspec)} | {cons} | {ln.domain} | {ln.target} | {ln.tag}"
        )
    return "\n".join(out) + "\n"


# --- bundle -------------------------------------------------------------------


@dataclass
class Tables:
    """All data tables for one group family."""

    gf: str
    families: dict[int, CharFamily]
    blocks: BlockData
    brauer: list[BrauerRow]
    maps: list[MapLine]


def load_tables(gf: str, data_dir: str | None = None) -> Tables:
    names = SP6_FILES if gf == "sp6" else SP4_FILES
    return Tables(
        gf=gf,
        families=parse_chartable(data_path(names["chartable"], data_dir)),
        blocks=parse_blocks(data_path(names["blocks"], data_dir)),
        brauer=parse_brauer(data_path(names["brauer"], data_dir)),
        maps=parse_maps(data_path(names["maps"], data_dir)),
    )
