"""Non-emptiness certificates for twisted Brill-Noether loci.

Each rule checks the hypotheses of one construction by exact arithmetic and
returns a Certificate tree recording the conclusion, every inequality that
was checked, numeric witnesses and the curve class the argument needs.  A
certificate is "proved" when every hypothesis was checked and every
sub-certificate is itself proved; hypotheses that are existential over
bundles and cannot be discharged arithmetically are recorded as assumed and
leave the certificate "conditional".  Rules never upgrade strength: a stable
conclusion is never derived from a semistable input.

Curve assumptions form a lattice general > petri > smooth (a general curve
is Petri, a Petri curve is smooth).  Constructive rules that need a general
or Petri curve simply do not fire on weaker classes.  Facts from the
database match on their genus constraint and record the curve class they
need in the certificate, so a query on a plain smooth curve can still chain
through a general-curve fact; the resulting certificate carries
level_required = "general" and is valid on curves of that class.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .bncalc import (
    BundleSpec,
    LocusSpec,
    beta_classical,
    beta_twisted,
    beta_universal,
    chi_tensor,
    line_bn_degree_bound,
    asympt_neg,
    t4_beta_poly,
)
from .exactnum import ALWAYS_NEGATIVE, quad_neg_threshold
from .spanops import CoherentSystemType, dual_span_type, elem_transform_type, r_fold_type

__all__ = [
    "CurveClass",
    "GenusConstraint",
    "Fact",
    "FactDatabase",
    "BUILTIN_FACTS",
    "Hypothesis",
    "Conclusion",
    "Certificate",
    "bn_line_nonempty",
    "petri_dls_cases",
    "bn_np1_nonempty",
    "s_nonempty",
    "certify_phi",
    "certify_rfold",
    "certify_elem",
    "certify_t9",
    "max_k_psi",
    "certify_t4",
    "cor_t3_d1_range",
    "certify_t10",
    "certify_c8",
    "revalidate",
]

_LEVEL_RANK = {"smooth": 0, "petri": 1, "general": 2}
_STRENGTH_RANK = {"semistable": 0, "stable": 1}


def _min_strength(*strengths: str) -> str:
    return min(strengths, key=_STRENGTH_RANK.__getitem__)


def _max_level(*levels: str) -> str:
    return max(levels, key=_LEVEL_RANK.__getitem__)


def _diag(diagnostics: Optional[list[str]], message: str) -> None:
    if diagnostics is not None:
        diagnostics.append(message)


@dataclass(frozen=True)
class CurveClass:
    """Genus plus assumption level and hyperelliptic flag of the base curve."""

    genus: int
    level: str = "smooth"
    hyperelliptic: str = "unknown"

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ValueError("genus must be at least 2, got %r" % (self.genus,))
        if self.level not in _LEVEL_RANK:
            raise ValueError("unknown curve level %r" % (self.level,))
        if self.hyperelliptic not in ("yes", "no", "unknown"):
            raise ValueError("unknown hyperelliptic flag %r" % (self.hyperelliptic,))

    def satisfies(self, required: str) -> bool:
        """True when this curve class implies the required one."""
        return _LEVEL_RANK[self.level] >= _LEVEL_RANK[required]

    @classmethod
    def parse(cls, text: str) -> "CurveClass":
        """Parse "level:genus" with an optional ",hyp" / ",nonhyp" suffix."""
        head, _, tail = text.partition(":")
        if not tail:
            raise ValueError(
                "curve must look like level:genus[,hyp|nonhyp], got %r" % (text,)
            )
        parts = tail.split(",")
        genus = int(parts[0])
        hyper = "unknown"
        for flag in parts[1:]:
            if flag == "hyp":
                hyper = "yes"
            elif flag == "nonhyp":
                hyper = "no"
            else:
                raise ValueError("unknown curve flag %r" % (flag,))
        return cls(genus=genus, level=head, hyperelliptic=hyper)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "level": self.level,
            "hyperelliptic": self.hyperelliptic,
        }


@dataclass(frozen=True)
class GenusConstraint:
    """Genus predicate of a fact: equality, lower bound and parity combine."""

    equals: int | None = None
    minimum: int | None = None
    parity: str | None = None

    def __post_init__(self) -> None:
        if self.parity not in (None, "odd", "even"):
            raise ValueError("parity must be odd or even, got %r" % (self.parity,))

    def matches(self, g: int) -> bool:
        if self.equals is not None and g != self.equals:
            return False
        if self.minimum is not None and g < self.minimum:
            return False
        if self.parity == "odd" and g % 2 == 0:
            return False
        if self.parity == "even" and g % 2 == 1:
            return False
        return True

    def describe(self) -> str:
        pieces = []
        if self.equals is not None:
            pieces.append("g = %d" % self.equals)
        if self.minimum is not None:
            pieces.append("g >= %d" % self.minimum)
        if self.parity is not None:
            pieces.append("g %s" % self.parity)
        return ", ".join(pieces) if pieces else "any g >= 2"

    def to_dict(self) -> dict:
        out: dict = {}
        if self.equals is not None:
            out["equals"] = self.equals
        if self.minimum is not None:
            out["min"] = self.minimum
        if self.parity is not None:
            out["parity"] = self.parity
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "GenusConstraint":
        return cls(
            equals=data.get("equals"),
            minimum=data.get("min"),
            parity=data.get("parity"),
        )


@dataclass(frozen=True)
class Fact:
    """A cited non-emptiness fact.

    kind "S" asserts a generated coherent system of type (n, d, sections)
    with stable dual span exists; "B" and "Btilde" assert non-emptiness of
    the stable resp. semistable locus with `sections` sections.  The degree
    is either absolute or an offset from the genus (d = g + offset).
    """

    kind: str
    n: int
    sections: int
    degree: int | None = None
    degree_offset_from_genus: int | None = None
    level: str = "smooth"
    genus: GenusConstraint = field(default_factory=GenusConstraint)
    citation: str = ""
    builtin: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("S", "B", "Btilde"):
            raise ValueError("fact kind must be S, B or Btilde, got %r" % (self.kind,))
        if self.n < 1 or self.sections < 1:
            raise ValueError("fact rank and section count must be positive")
        if (self.degree is None) == (self.degree_offset_from_genus is None):
            raise ValueError("exactly one of degree / genus offset must be set")
        if self.level not in _LEVEL_RANK:
            raise ValueError("unknown curve level %r" % (self.level,))
        if not self.citation:
            raise ValueError("every fact must carry a citation")

    def degree_at(self, g: int) -> int:
        if self.degree is not None:
            return self.degree
        return g + self.degree_offset_from_genus

    def key(self) -> tuple:
        return (
            self.kind,
            self.n,
            self.sections,
            self.degree,
            self.degree_offset_from_genus,
        )

    def matches(self, genus: int, n: int, d: int, sections: int) -> bool:
        return (
            self.n == n
            and self.sections == sections
            and self.genus.matches(genus)
            and self.degree_at(genus) == d
        )

    def describe(self) -> str:
        if self.degree is not None:
            deg = str(self.degree)
        elif self.degree_offset_from_genus >= 0:
            deg = "g+%d" % self.degree_offset_from_genus
        else:
            deg = "g-%d" % (-self.degree_offset_from_genus)
        return "%s(%d,%s,%d)" % (self.kind, self.n, deg, self.sections)

    def to_record(self) -> dict:
        record: dict = {"kind": self.kind, "n": self.n}
        if self.degree is not None:
            record["d"] = self.degree
        else:
            off = self.degree_offset_from_genus
            record["d"] = "g+%d" % off if off >= 0 else "g-%d" % (-off)
        record["v" if self.kind == "S" else "k"] = self.sections
        record["level"] = self.level
        record["genus"] = self.genus.to_dict()
        record["citation"] = self.citation
        return record

    @classmethod
    def from_record(cls, record: dict) -> "Fact":
        kind = record.get("kind")
        raw_d = record.get("d")
        degree = None
        offset = None
        if isinstance(raw_d, str):
            text = raw_d.replace(" ", "")
            if not text.startswith("g"):
                raise ValueError("degree must be an integer or g+offset, got %r" % raw_d)
            rest = text[1:]
            offset = int(rest) if rest else 0
        elif raw_d is None:
            raise ValueError("fact record is missing the degree field 'd'")
        else:
            degree = int(raw_d)
        sections = record.get("v" if kind == "S" else "k")
        if sections is None:
            sections = record.get("k") if kind == "S" else record.get("v")
        if sections is None:
            raise ValueError("fact record is missing the section count")
        return cls(
            kind=kind,
            n=int(record["n"]),
            sections=int(sections),
            degree=degree,
            degree_offset_from_genus=offset,
            level=record.get("level", "smooth"),
            genus=GenusConstraint.from_dict(record.get("genus", {})),
            citation=record.get("citation", ""),
        )


BUILTIN_FACTS: tuple[Fact, ...] = (
    Fact(
        kind="S",
        n=2,
        sections=4,
        degree_offset_from_genus=3,
        level="general",
        genus=GenusConstraint(minimum=5, parity="odd"),
        citation=(
            "rank-2 coherent systems of type (2, g+3, 4) with stable dual span "
            "exist on a general curve of odd genus at least 5"
        ),
        builtin=True,
    ),
    Fact(
        kind="S",
        n=2,
        sections=5,
        degree=10,
        level="general",
        genus=GenusConstraint(equals=6),
        citation=(
            "rank-2 coherent systems of type (2, 10, 5) with stable dual span "
            "exist on a general curve of genus 6"
        ),
        builtin=True,
    ),
    Fact(
        kind="B",
        n=2,
        sections=5,
        degree=10,
        level="general",
        genus=GenusConstraint(equals=6),
        citation="non-emptiness of B(2, 10, 5) on a general curve of genus 6",
        builtin=True,
    ),
    Fact(
        kind="B",
        n=6,
        sections=7,
        degree=22,
        level="general",
        genus=GenusConstraint(equals=10),
        citation=(
            "non-emptiness of B(6, 22, 7) on a general curve of genus 10: "
            "the point (22/6, 7/6) lies in the bpn region"
        ),
        builtin=True,
    ),
)


class FactDatabase:
    """Built-in facts merged with user facts; built-ins win on conflicts."""

    def __init__(self, user_facts: tuple[Fact, ...] | list[Fact] = ()) -> None:
        self._builtin = list(BUILTIN_FACTS)
        builtin_keys = {f.key() for f in self._builtin}
        self._user = [f for f in user_facts if f.key() not in builtin_keys]

    @classmethod
    def load(cls, path: str | Path | None = None) -> "FactDatabase":
        if path is None:
            return cls()
        path = Path(path)
        if not path.exists():
            return cls()
        records = json.loads(path.read_text(encoding="utf-8"))
        if not isinstance(records, list):
            raise ValueError("facts file must hold a JSON array of fact records")
        return cls([Fact.from_record(r) for r in records])

    def save(self, path: str | Path) -> None:
        records = [f.to_record() for f in self._user]
        Path(path).write_text(
            json.dumps(records, indent=2) + "\n", encoding="utf-8"
        )

    def add(self, fact: Fact) -> None:
        builtin_keys = {f.key() for f in self._builtin}
        if fact.key() in builtin_keys:
            raise ValueError(
                "fact %s conflicts with a built-in fact" % fact.describe()
            )
        self._user.append(fact)

    def facts(self) -> list[Fact]:
        return list(self._builtin) + list(self._user)

    def _find(self, kinds: tuple[str, ...], genus: int, n: int, d: int, sections: int):
        for fact in self.facts():
            if fact.kind in kinds and fact.matches(genus, n, d, sections):
                return fact
        return None

    def find_s(self, genus: int, n: int, d: int, v: int) -> Fact | None:
        return self._find(("S",), genus, n, d, v)

    def find_b(self, genus: int, n: int, d: int, k: int) -> Fact | None:
        found = self._find(("B",), genus, n, d, k)
        if found is not None:
            return found
        return self._find(("Btilde",), genus, n, d, k)


@dataclass(frozen=True)
class Hypothesis:
    """One recorded hypothesis: checked arithmetically, or assumed."""

    description: str
    status: str = "checked"

    def __post_init__(self) -> None:
        if self.status not in ("checked", "assumed"):
            raise ValueError("hypothesis status must be checked or assumed")


@dataclass(frozen=True)
class Conclusion:
    """What a certificate asserts: a locus of one of four kinds.

    kind "universal" is the two-sided locus (n1, d1) x (n2, d2) with k
    sections of the tensor product; "bn" is B(n1, d1, k); "s" is the
    coherent-system locus S(n1, d1, k); "twisted" is the one-sided locus of
    (n2, d2)-bundles with k sections after twisting by some bundle of type
    (n1, d1).  Strength "semistable" means the tilde (semistable) variant.
    """

    kind: str
    strength: str
    n1: int | None = None
    d1: int | None = None
    n2: int | None = None
    d2: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("universal", "bn", "s", "twisted"):
            raise ValueError("unknown conclusion kind %r" % (self.kind,))
        if self.strength not in _STRENGTH_RANK:
            raise ValueError("unknown strength %r" % (self.strength,))

    def describe(self) -> str:
        tilde = "" if self.strength == "stable" else "~"
        if self.kind == "universal":
            return "%sB^%d nonempty for (n1,d1)=(%d,%d), (n2,d2)=(%d,%d)" % (
                tilde, self.k, self.n1, self.d1, self.n2, self.d2,
            )
        if self.kind == "bn":
            return "%sB(%d,%d,%d) nonempty" % (tilde, self.n1, self.d1, self.k)
        if self.kind == "s":
            return "%sS(%d,%d,%d) nonempty" % (tilde, self.n1, self.d1, self.k)
        return "B(%d,%d,%d)(F) nonempty for some F of type (%d,%d)" % (
            self.n2, self.d2, self.k, self.n1, self.d1,
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n1": self.n1,
            "d1": self.d1,
            "n2": self.n2,
            "d2": self.d2,
            "k": self.k,
            "strength": self.strength,
        }


def _encode(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if value is ALWAYS_NEGATIVE:
        return "always"
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


@dataclass
class Certificate:
    """A machine-checkable derivation: rule, hypotheses, witnesses, subtree."""

    rule: str
    citation: str
    conclusion: Conclusion
    beta: int | None
    hypotheses: list[Hypothesis]
    subcertificates: list["Certificate"]
    status: str
    witnesses: dict
    level_required: str
    curve: CurveClass
    notes: list[str]
    inputs: dict

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "citation": self.citation,
            "conclusion": self.conclusion.to_dict(),
            "beta": self.beta,
            "hypotheses": [
                {"description": h.description, "status": h.status}
                for h in self.hypotheses
            ],
            "subcertificates": [s.to_dict() for s in self.subcertificates],
            "status": self.status,
            "witnesses": {k: _encode(v) for k, v in self.witnesses.items()},
            "level_required": self.level_required,
            "curve": self.curve.to_dict(),
            "notes": list(self.notes),
            "inputs": self.inputs,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _finish(
    rule: str,
    citation: str,
    conclusion: Conclusion,
    beta: int | None,
    hypotheses: list[Hypothesis],
    subcertificates: list[Certificate],
    witnesses: dict,
    own_level: str,
    curve: CurveClass,
    notes: list[str],
    inputs: dict,
) -> Certificate:
    level = _max_level(own_level, *[s.level_required for s in subcertificates]) \
        if subcertificates else own_level
    proved = all(h.status == "checked" for h in hypotheses) and all(
        s.status == "proved" for s in subcertificates
    )
    return Certificate(
        rule=rule,
        citation=citation,
        conclusion=conclusion,
        beta=beta,
        hypotheses=hypotheses,
        subcertificates=subcertificates,
        status="proved" if proved else "conditional",
        witnesses=witnesses,
        level_required=level,
        curve=curve,
        notes=notes,
        inputs=inputs,
    )


def _locus(l: LocusSpec | tuple[int, int, int]) -> LocusSpec:
    if isinstance(l, LocusSpec):
        return l
    n, d, k = l
    return LocusSpec(BundleSpec(n, d), k)


def _cs(cs: CoherentSystemType | tuple[int, int, int]) -> CoherentSystemType:
    return cs if isinstance(cs, CoherentSystemType) else CoherentSystemType(*cs)


# ---------------------------------------------------------------------------
# Fact-backed certificates


def _fact_certificate(fact: Fact, curve: CurveClass) -> Certificate:
    d = fact.degree_at(curve.genus)
    if fact.kind == "S":
        kind, strength = "s", "stable"
    elif fact.kind == "B":
        kind, strength = "bn", "stable"
    else:
        kind, strength = "bn", "semistable"
    beta = beta_classical(curve.genus, fact.n, d, fact.sections)
    conclusion = Conclusion(
        kind=kind, strength=strength, n1=fact.n, d1=d, k=fact.sections
    )
    hyp = Hypothesis(
        "genus constraint of the cited fact holds at g = %d (%s)"
        % (curve.genus, fact.genus.describe())
    )
    return _finish(
        rule="fact",
        citation=fact.citation,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[hyp],
        subcertificates=[],
        witnesses={"beta": beta},
        own_level=fact.level,
        curve=curve,
        notes=[],
        inputs={
            "kind": fact.kind,
            "n": fact.n,
            "d": d,
            "sections": fact.sections,
        },
    )


# ---------------------------------------------------------------------------
# Rank-one and n+1-section rules


CITE_CLASSICAL_BN = (
    "classical Brill-Noether theory: linear systems of type (d, v) exist on "
    "a Petri curve exactly when beta(1, d, v) >= 0"
)


def bn_line_nonempty(
    curve: CurveClass, d: int, v: int, *, diagnostics: Optional[list[str]] = None
) -> Certificate | None:
    """Certify B(1, d, v) nonempty from classical theory.

    Applies on Petri and general curves; on a merely smooth curve no rule
    applies and None is returned.
    """
    if v < 1:
        raise ValueError("section count must be at least 1, got %r" % (v,))
    if not curve.satisfies("petri"):
        _diag(diagnostics, "line-bundle rule needs a Petri or general curve")
        return None
    beta = beta_classical(curve.genus, 1, d, v)
    if beta < 0:
        _diag(
            diagnostics,
            "beta(1,%d,%d) = %d < 0: no linear system of that type" % (d, v, beta),
        )
        return None
    conclusion = Conclusion(kind="bn", strength="stable", n1=1, d1=d, k=v)
    return _finish(
        rule="line",
        citation=CITE_CLASSICAL_BN,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[Hypothesis("beta(1,%d,%d) = %d >= 0" % (d, v, beta))],
        subcertificates=[],
        witnesses={"beta": beta},
        own_level="petri",
        curve=curve,
        notes=[],
        inputs={"d": d, "v": v},
    )


def _petri_cases(
    curve: CurveClass, n1: int, d1: int, facts: FactDatabase | None
) -> tuple[list[str], list[Fact]]:
    g = curve.genus
    labels: list[str] = []
    used: list[Fact] = []
    if n1 <= 4:
        labels.append("a")
    if g >= 2 * n1 - 4:
        labels.append("b")
    if facts is not None and n1 >= 2:
        for fact in facts.facts():
            if fact.kind != "S" or fact.n != 1 or fact.sections != n1 + 1:
                continue
            if not fact.genus.matches(g):
                continue
            d0 = fact.degree_at(g)
            if "c" not in labels and d1 > d0 and (d1 - d0) % n1 == 0:
                labels.append("c")
                used.append(fact)
            if (
                "d" not in labels
                and d0 % n1 == 0
                and d0 // n1 >= 1
                and d1 > d0
                and (d1 % n1 in (1, n1 - 1))
            ):
                labels.append("d")
                used.append(fact)
    if d1 <= 2 * n1:
        labels.append("e")
    if n1 >= 2:
        bound_f = n1 + g + Fraction((n1 * n1 - n1 - 2) * g, 2 * (n1 - 1) * (n1 - 1))
        if d1 < bound_f or (g % 2 == 1 and d1 == bound_f):
            labels.append("f")
    if d1 >= n1 * ((g + 3 + 1) // 2) + 1:
        labels.append("g")
    elif g % 2 == 0:
        catalan_bound = math.factorial(g) // (
            math.factorial(g // 2) * math.factorial(g // 2 + 1)
        )
        if n1 <= catalan_bound and d1 >= n1 * (g + 2) // 2 + 1:
            labels.append("g")
    order = "abcdefg"
    labels.sort(key=order.index)
    return labels, used


def petri_dls_cases(
    curve: CurveClass, n1: int, d1: int, facts: FactDatabase | None = None
) -> list[str]:
    """Labels of the known Petri-curve stability cases satisfied by (n1, d1).

    Cases "c" and "d" quantify over an auxiliary generated linear system and
    are only evaluated against explicitly supplied rank-one S facts.
    """
    if not curve.satisfies("petri"):
        raise ValueError("the case list applies to Petri or general curves")
    labels, _ = _petri_cases(curve, n1, d1, facts)
    return labels


CITE_NP1_GENERAL = (
    "dual spans of general linear systems with n1+1 sections are stable on a "
    "general curve (Farkas-Larson for n1 >= 3, classical for n1 = 2), and "
    "the degree bound is also necessary"
)
CITE_NP1_PETRI = (
    "dual spans of general linear systems are stable on Petri curves in all "
    "of the listed cases"
)


def bn_np1_nonempty(
    curve: CurveClass,
    n1: int,
    d1: int,
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify B(n1, d1, n1+1) nonempty via dual spans of linear systems.

    On a general curve the criterion beta(1, d1, n1+1) >= 0 is exact, with
    the single exception g = 2, d1 = 2*n1 where only the semistable locus is
    nonempty.  On a Petri curve the rule fires only in the known stability
    cases.  On a merely smooth curve no rule applies.
    """
    if n1 < 2:
        raise ValueError("requires n1 >= 2, got %r" % (n1,))
    facts = facts if facts is not None else FactDatabase()
    g = curve.genus
    beta = beta_classical(g, 1, d1, n1 + 1)
    if curve.satisfies("general"):
        if beta < 0:
            _diag(
                diagnostics,
                "beta(1,%d,%d) = %d < 0: the locus is empty on a general curve"
                % (d1, n1 + 1, beta),
            )
            return None
        exceptional = g == 2 and d1 == 2 * n1
        strength = "semistable" if exceptional else "stable"
        notes = []
        if exceptional:
            notes.append(
                "at genus 2 with d1 = 2*n1 the dual span is strictly semistable; "
                "only the semistable locus is certified"
            )
        conclusion = Conclusion(
            kind="bn", strength=strength, n1=n1, d1=d1, k=n1 + 1
        )
        return _finish(
            rule="np1",
            citation=CITE_NP1_GENERAL,
            conclusion=conclusion,
            beta=beta,
            hypotheses=[Hypothesis("beta(1,%d,%d) = %d >= 0" % (d1, n1 + 1, beta))],
            subcertificates=[],
            witnesses={"beta": beta, "exceptional_genus2": exceptional},
            own_level="general",
            curve=curve,
            notes=notes,
            inputs={"n1": n1, "d1": d1},
        )
    if curve.satisfies("petri"):
        if beta < 0:
            _diag(
                diagnostics,
                "beta(1,%d,%d) = %d < 0: empty on any Petri curve" % (d1, n1 + 1, beta),
            )
            return None
        labels, used = _petri_cases(curve, n1, d1, facts)
        if not labels:
            _diag(diagnostics, "no known Petri stability case covers this degree")
            return None
        level = _max_level("petri", *[f.level for f in used]) if used else "petri"
        conclusion = Conclusion(kind="bn", strength="stable", n1=n1, d1=d1, k=n1 + 1)
        return _finish(
            rule="np1",
            citation=CITE_NP1_PETRI,
            conclusion=conclusion,
            beta=beta,
            hypotheses=[
                Hypothesis("beta(1,%d,%d) = %d >= 0" % (d1, n1 + 1, beta)),
                Hypothesis("Petri stability case(s) %s hold" % ",".join(labels)),
            ],
            subcertificates=[],
            witnesses={"beta": beta, "cases": labels},
            own_level=level,
            curve=curve,
            notes=[],
            inputs={"n1": n1, "d1": d1},
        )
    _diag(diagnostics, "no rule certifies B(n,d,n+1) on a merely smooth curve")
    return None


# ---------------------------------------------------------------------------
# Coherent systems with stable dual span


CITE_S_GENERAL = (
    "general linear systems on a general curve generate and have stable dual "
    "span whenever beta(1, d, v) >= 0 (Farkas-Larson)"
)
CITE_MISTRETTA = (
    "Mistretta: for a general subspace of codimension 1 <= c <= g of the "
    "sections of a line bundle of degree d >= 2g+2c the dual span is "
    "semistable, and stable unless d = 2g+2c on a hyperelliptic curve"
)


def s_nonempty(
    curve: CurveClass,
    cs: CoherentSystemType | tuple[int, int, int],
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify that S(n, d, v) is nonempty.

    Rule order: rank-one systems on a general curve, then rank-one systems
    on any smooth curve with the codimension bound, then the fact database.
    """
    cs = _cs(cs)
    facts = facts if facts is not None else FactDatabase()
    g = curve.genus
    if cs.v <= cs.n:
        _diag(diagnostics, "S(n,d,v) requires v > n")
        return None
    if cs.n == 1:
        beta = beta_classical(g, 1, cs.d, cs.v)
        if curve.satisfies("general") and beta >= 0:
            exceptional = g == 2 and cs.d == 2 * (cs.v - 1)
            strength = "semistable" if exceptional else "stable"
            notes = []
            if exceptional:
                notes.append(
                    "at genus 2 with d = 2(v-1) the dual span is strictly "
                    "semistable"
                )
            conclusion = Conclusion(
                kind="s", strength=strength, n1=1, d1=cs.d, k=cs.v
            )
            return _finish(
                rule="s",
                citation=CITE_S_GENERAL,
                conclusion=conclusion,
                beta=beta,
                hypotheses=[
                    Hypothesis("beta(1,%d,%d) = %d >= 0" % (cs.d, cs.v, beta))
                ],
                subcertificates=[],
                witnesses={"branch": "rank1-general", "beta": beta},
                own_level="general",
                curve=curve,
                notes=notes,
                inputs={"cs": [cs.n, cs.d, cs.v]},
            )
        c = (cs.d - g + 1) - cs.v
        if 1 <= c <= g and cs.d >= 2 * g + 2 * c:
            boundary = cs.d == 2 * g + 2 * c
            strength = (
                "semistable" if boundary and curve.hyperelliptic != "no" else "stable"
            )
            notes = []
            if boundary and curve.hyperelliptic != "no":
                notes.append(
                    "d = 2g+2c is the boundary case; stability needs a "
                    "non-hyperelliptic curve"
                )
            conclusion = Conclusion(
                kind="s", strength=strength, n1=1, d1=cs.d, k=cs.v
            )
            return _finish(
                rule="s",
                citation=CITE_MISTRETTA,
                conclusion=conclusion,
                beta=beta_classical(g, 1, cs.d, cs.v),
                hypotheses=[
                    Hypothesis(
                        "codimension c = (d-g+1) - v = %d lies in [1, %d]" % (c, g)
                    ),
                    Hypothesis("d = %d >= 2g+2c = %d" % (cs.d, 2 * g + 2 * c)),
                ],
                subcertificates=[],
                witnesses={"branch": "rank1-mistretta", "c": c},
                own_level="smooth",
                curve=curve,
                notes=notes,
                inputs={"cs": [cs.n, cs.d, cs.v]},
            )
    fact = facts.find_s(g, cs.n, cs.d, cs.v)
    if fact is not None:
        return _fact_certificate(fact, curve)
    _diag(
        diagnostics,
        "no rule or fact certifies S(%d,%d,%d) on this curve" % (cs.n, cs.d, cs.v),
    )
    return None


def _certify_b(
    curve: CurveClass,
    n1: int,
    d1: int,
    k1: int,
    facts: FactDatabase | None,
    diagnostics: Optional[list[str]],
) -> Certificate | None:
    """Sub-certificate dispatcher for B(n1, d1, k1)."""
    if n1 == 1:
        cert = bn_line_nonempty(curve, d1, k1, diagnostics=diagnostics)
        if cert is not None:
            return cert
    elif k1 == n1 + 1:
        cert = bn_np1_nonempty(curve, n1, d1, facts, diagnostics=diagnostics)
        if cert is not None:
            return cert
    if facts is not None:
        fact = facts.find_b(curve.genus, n1, d1, k1)
        if fact is not None:
            return _fact_certificate(fact, curve)
    _diag(
        diagnostics,
        "no rule or fact certifies B(%d,%d,%d) on this curve" % (n1, d1, k1),
    )
    return None


# ---------------------------------------------------------------------------
# Dual-span product constructions


CITE_PHI = (
    "tensor section count for a stable dual span: h^0(E1 tensor D) >= k1*v "
    "when h^0(E* tensor E1) = 0"
)
CITE_RFOLD = "r-fold direct sums of a semistable dual span are semistable"
CITE_ELEM = (
    "elementary transformations of direct sums of pairwise distinct stable "
    "dual spans are stable"
)


def certify_phi(
    curve: CurveClass,
    locus1: LocusSpec | tuple[int, int, int],
    cs: CoherentSystemType | tuple[int, int, int],
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the universal locus via the dual-span pairing.

    Requires a certificate for B(n1, d1, k1), one for S(n, d, v), and the
    slope condition n*d1 < n1*d which forces h^0(E* tensor E1) = 0.  The
    conclusion has k = k1*v sections and the minimum of the sub-strengths.
    """
    locus1 = _locus(locus1)
    cs = _cs(cs)
    facts = facts if facts is not None else FactDatabase()
    n1, d1, k1 = locus1.bundle.n, locus1.bundle.d, locus1.k
    g = curve.genus
    if cs.v <= cs.n:
        _diag(diagnostics, "the generated system must have v > n")
        return None
    if not cs.n * d1 < n1 * cs.d:
        _diag(
            diagnostics,
            "slope condition fails: need n*d1 < n1*d, got %d >= %d"
            % (cs.n * d1, n1 * cs.d),
        )
        return None
    sub_b = _certify_b(curve, n1, d1, k1, facts, diagnostics)
    if sub_b is None:
        return None
    sub_s = s_nonempty(curve, cs, facts, diagnostics=diagnostics)
    if sub_s is None:
        return None
    dual = dual_span_type(cs)
    n2, d2, k2 = dual.bundle.n, dual.bundle.d, dual.k
    k = k1 * k2
    beta = beta_universal(g, (n1, d1), (n2, d2), k)
    strength = _min_strength(sub_b.conclusion.strength, sub_s.conclusion.strength)
    conclusion = Conclusion(
        kind="universal", strength=strength, n1=n1, d1=d1, n2=n2, d2=d2, k=k
    )
    return _finish(
        rule="phi",
        citation=CITE_PHI,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[
            Hypothesis("generated system has v = %d > n = %d" % (cs.v, cs.n)),
            Hypothesis(
                "slope condition n*d1 = %d < n1*d = %d" % (cs.n * d1, n1 * cs.d)
            ),
        ],
        subcertificates=[sub_b, sub_s],
        witnesses={"k": k, "k2": k2, "beta": beta, "beta_negative": beta < 0},
        own_level="smooth",
        curve=curve,
        notes=[],
        inputs={"locus1": [n1, d1, k1], "cs": [cs.n, cs.d, cs.v]},
    )


def certify_rfold(
    curve: CurveClass,
    locus1: LocusSpec | tuple[int, int, int],
    cs: CoherentSystemType | tuple[int, int, int],
    r: int,
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the semistable universal locus for the r-fold sum of a dual
    span.  The conclusion is always semistable-only."""
    locus1 = _locus(locus1)
    cs = _cs(cs)
    facts = facts if facts is not None else FactDatabase()
    if r < 1:
        raise ValueError("fold count must be positive, got %r" % (r,))
    n1, d1, k1 = locus1.bundle.n, locus1.bundle.d, locus1.k
    g = curve.genus
    if cs.v <= cs.n:
        _diag(diagnostics, "the generated system must have v > n")
        return None
    if not cs.n * d1 < n1 * cs.d:
        _diag(
            diagnostics,
            "slope condition fails: need n*d1 < n1*d, got %d >= %d"
            % (cs.n * d1, n1 * cs.d),
        )
        return None
    sub_b = _certify_b(curve, n1, d1, k1, facts, diagnostics)
    if sub_b is None:
        return None
    sub_s = s_nonempty(curve, cs, facts, diagnostics=diagnostics)
    if sub_s is None:
        return None
    target = r_fold_type(cs, r)
    n2, d2, k2 = target.bundle.n, target.bundle.d, target.k
    k = k1 * k2
    beta = beta_universal(g, (n1, d1), (n2, d2), k)
    conclusion = Conclusion(
        kind="universal", strength="semistable", n1=n1, d1=d1, n2=n2, d2=d2, k=k
    )
    return _finish(
        rule="rfold",
        citation=CITE_RFOLD,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[
            Hypothesis("generated system has v = %d > n = %d" % (cs.v, cs.n)),
            Hypothesis(
                "slope condition n*d1 = %d < n1*d = %d" % (cs.n * d1, n1 * cs.d)
            ),
        ],
        subcertificates=[sub_b, sub_s],
        witnesses={"k": k, "k2": k2, "r": r, "beta": beta, "beta_negative": beta < 0},
        own_level="smooth",
        curve=curve,
        notes=["direct sums are strictly semistable; only the semistable locus "
               "is certified"],
        inputs={"locus1": [n1, d1, k1], "cs": [cs.n, cs.d, cs.v], "r": r},
    )


def certify_elem(
    curve: CurveClass,
    locus1: LocusSpec | tuple[int, int, int],
    cs: CoherentSystemType | tuple[int, int, int],
    r: int,
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the stable universal locus for an elementary transformation of
    an r-fold sum of pairwise distinct stable dual spans.

    Needs (v - n) | d and stable sub-certificates on both sides.  For r >= 2
    the pairwise-distinctness of the r dual spans is recorded as an assumed
    hypothesis, so the certificate is conditional.
    """
    locus1 = _locus(locus1)
    cs = _cs(cs)
    facts = facts if facts is not None else FactDatabase()
    if r < 1:
        raise ValueError("fold count must be positive, got %r" % (r,))
    n1, d1, k1 = locus1.bundle.n, locus1.bundle.d, locus1.k
    g = curve.genus
    if cs.v <= cs.n:
        _diag(diagnostics, "the generated system must have v > n")
        return None
    if cs.d % (cs.v - cs.n) != 0:
        _diag(
            diagnostics,
            "elementary transformation requires (v-n) | d, got d=%d, v-n=%d"
            % (cs.d, cs.v - cs.n),
        )
        return None
    if not cs.n * d1 < n1 * cs.d:
        _diag(
            diagnostics,
            "slope condition fails: need n*d1 < n1*d, got %d >= %d"
            % (cs.n * d1, n1 * cs.d),
        )
        return None
    sub_b = _certify_b(curve, n1, d1, k1, facts, diagnostics)
    if sub_b is None:
        return None
    if sub_b.conclusion.strength != "stable":
        _diag(diagnostics, "the elementary transformation needs a stable E1")
        return None
    sub_s = s_nonempty(curve, cs, facts, diagnostics=diagnostics)
    if sub_s is None:
        return None
    if sub_s.conclusion.strength != "stable":
        _diag(diagnostics, "the elementary transformation needs stable dual spans")
        return None
    target = elem_transform_type(cs, r)
    n2, d2, k2 = target.bundle.n, target.bundle.d, target.k
    k = k1 * k2
    beta = beta_universal(g, (n1, d1), (n2, d2), k)
    hypotheses = [
        Hypothesis("degree divisibility (v-n) | d: %d | %d" % (cs.v - cs.n, cs.d)),
        Hypothesis(
            "slope condition n*d1 = %d < n1*d = %d" % (cs.n * d1, n1 * cs.d)
        ),
    ]
    if r >= 2:
        hypotheses.append(
            Hypothesis(
                "the %d chosen coherent systems have pairwise non-isomorphic "
                "dual spans" % r,
                status="assumed",
            )
        )
    conclusion = Conclusion(
        kind="universal", strength="stable", n1=n1, d1=d1, n2=n2, d2=d2, k=k
    )
    return _finish(
        rule="elem",
        citation=CITE_ELEM,
        conclusion=conclusion,
        beta=beta,
        hypotheses=hypotheses,
        subcertificates=[sub_b, sub_s],
        witnesses={"k": k, "k2": k2, "r": r, "beta": beta, "beta_negative": beta < 0},
        own_level="smooth",
        curve=curve,
        notes=[],
        inputs={"locus1": [n1, d1, k1], "cs": [cs.n, cs.d, cs.v], "r": r},
    )


CITE_T9 = (
    "generated stable bundles exist in every degree above n*g; a general "
    "section subspace generates, and the slope gap kills h^0(E* tensor E1)"
)


def certify_t9(
    curve: CurveClass,
    locus1: LocusSpec | tuple[int, int, int],
    n: int,
    d: int,
    v: int,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the twisted locus B(v-n, d, v)(F) nonempty for some F of the
    type of locus1, without demanding stability of the dual span.

    Needs a general curve, d > n*g, n < v <= d - n*(g-1) and slope gap
    mu1 < d/(v-n).
    """
    locus1 = _locus(locus1)
    if not curve.satisfies("general"):
        _diag(diagnostics, "this construction needs a general curve")
        return None
    g = curve.genus
    n1, d1 = locus1.bundle.n, locus1.bundle.d
    if not d > n * g:
        _diag(diagnostics, "need d > n*g, got d=%d, n*g=%d" % (d, n * g))
        return None
    if not n < v:
        _diag(diagnostics, "need v > n, got v=%d, n=%d" % (v, n))
        return None
    if not v <= d - n * (g - 1):
        _diag(
            diagnostics,
            "need v <= d - n*(g-1), got v=%d, bound=%d" % (v, d - n * (g - 1)),
        )
        return None
    mu1 = locus1.bundle.mu
    mu2 = Fraction(d, v - n)
    if not mu1 < mu2:
        _diag(diagnostics, "need mu1 < mu2, got %s >= %s" % (mu1, mu2))
        return None
    beta = beta_twisted(g, (v - n, d), (n1, d1), v)
    conclusion = Conclusion(
        kind="twisted", strength="stable", n1=n1, d1=d1, n2=v - n, d2=d, k=v
    )
    return _finish(
        rule="t9",
        citation=CITE_T9,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[
            Hypothesis("d = %d > n*g = %d" % (d, n * g)),
            Hypothesis("n = %d < v = %d <= d - n*(g-1) = %d" % (n, v, d - n * (g - 1))),
            Hypothesis("slope gap mu1 = %s < mu2 = %s" % (mu1, mu2)),
        ],
        subcertificates=[],
        witnesses={"k1k2": locus1.k * v, "beta": beta},
        own_level="general",
        curve=curve,
        notes=[
            "the conclusion holds for some twisting bundle F of rank %d and "
            "degree %d" % (n1, d1),
            "the upper range for v is taken inclusive; the underlying "
            "generation argument uses the strict form",
        ],
        inputs={"locus1": [n1, d1, locus1.k], "n": n, "d": d, "v": v},
    )


# ---------------------------------------------------------------------------
# Kernel-bundle constructions


def max_k_psi(
    g: int,
    locus1: LocusSpec | tuple[int, int, int],
    cs: CoherentSystemType | tuple[int, int, int],
    h1_defect: int = 0,
) -> int:
    """Largest certifiable section count for the kernel pairing:
    v*k1 - chi(E1 tensor E) - m, where m bounds the h^1 defect.

    The value may be non-positive, in which case no certificate is possible;
    callers clamp at 0.
    """
    locus1 = _locus(locus1)
    cs = _cs(cs)
    if locus1.k < 1:
        raise ValueError("k1 must be at least 1")
    if h1_defect < 0:
        raise ValueError("h1 defect must be non-negative")
    return (
        cs.v * locus1.k
        - chi_tensor(g, (locus1.bundle.n, locus1.bundle.d), (cs.n, cs.d))
        - h1_defect
    )


CITE_T4 = (
    "kernel bundle section count: h^0(E1 tensor D*) >= v*k1 - h^0(E1 tensor E), "
    "with h^1(E1 tensor E) = 0 supplying the count by Riemann-Roch"
)


def certify_t4(
    curve: CurveClass,
    n1: int,
    d1: int,
    k1: int,
    n: int,
    e: int,
    f: int,
    d: int,
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the universal locus via the kernel construction with the
    excess parameterisation k = d*(k1-n1) - e, v = d - n*(g-1) - f.

    Checks the window  n(g-1)(k1-n1) + n*d1 + f*k1 <= e < d*(k1-n1), which is
    exactly the section-count bound together with k >= 1.  Records the
    eventually-negative flag and the explicit degree threshold beyond which
    the BN number of the family is negative.
    """
    facts = facts if facts is not None else FactDatabase()
    if n1 < 2 or k1 <= n1:
        raise ValueError("requires k1 > n1 >= 2, got k1=%r n1=%r" % (k1, n1))
    if n < 1:
        raise ValueError("rank n must be positive, got %r" % (n,))
    g = curve.genus
    lower = n * (g - 1) * (k1 - n1) + n * d1 + f * k1
    upper = d * (k1 - n1)
    if not lower <= e:
        _diag(
            diagnostics,
            "excess window lower bound fails: need %d <= e, got e=%d" % (lower, e),
        )
        return None
    if not e < upper:
        _diag(
            diagnostics,
            "excess window upper bound fails: need e < %d, got e=%d" % (upper, e),
        )
        return None
    v = d - n * (g - 1) - f
    n2 = d - n * g - f
    d2 = -d
    k = d * (k1 - n1) - e
    if n2 < 1:
        _diag(diagnostics, "kernel rank v - n = %d is not positive" % (n2,))
        return None
    if k < 1:
        raise AssertionError("the excess window guarantees k >= 1")
    sub_b = _certify_b(curve, n1, d1, k1, facts, diagnostics)
    if sub_b is None:
        return None
    sub_s = s_nonempty(curve, (n, d, v), facts, diagnostics=diagnostics)
    if sub_s is None:
        return None
    mu_tensor = Fraction(d1, n1) + Fraction(d, n)
    h1_auto = mu_tensor > 2 * g - 2
    if h1_auto:
        h1_hyp = Hypothesis(
            "slope of E1 tensor E is %s > 2g-2 = %d, forcing h^1 = 0"
            % (mu_tensor, 2 * g - 2)
        )
    else:
        h1_hyp = Hypothesis(
            "there exists E1 in B(%d,%d,%d) with h^1(E1 tensor E) = 0"
            % (n1, d1, k1),
            status="assumed",
        )
    beta = beta_universal(g, (n1, d1), (n2, d2), k)
    poly = t4_beta_poly(g, n1, d1, k1, n, e, f)
    threshold = quad_neg_threshold(*poly)
    flag = asympt_neg(g, n1, d1, k1)
    strength = _min_strength(sub_b.conclusion.strength, sub_s.conclusion.strength)
    conclusion = Conclusion(
        kind="universal", strength=strength, n1=n1, d1=d1, n2=n2, d2=d2, k=k
    )
    return _finish(
        rule="t4",
        citation=CITE_T4,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[
            Hypothesis("excess window lower bound %d <= e = %d" % (lower, e)),
            Hypothesis("excess window upper bound e = %d < %d (so k >= 1)" % (e, upper)),
            Hypothesis("kernel rank v - n = %d >= 1" % (n2,)),
            h1_hyp,
        ],
        subcertificates=[sub_b, sub_s],
        witnesses={
            "k": k,
            "v": v,
            "beta": beta,
            "beta_negative": beta < 0,
            "beta_poly_in_d": list(poly),
            "negativity_threshold_d": threshold,
            "asympt_neg": flag,
        },
        own_level="smooth",
        curve=curve,
        notes=[],
        inputs={
            "n1": n1, "d1": d1, "k1": k1, "n": n, "e": e, "f": f, "d": d,
        },
    )


def cor_t3_d1_range(curve: CurveClass, n1: int) -> range:
    """Admissible degrees d1 for the k1 = n1+1 kernel examples.

    Rank 2 uses [2 + ceil(2g/3), g+1]; ranks 3 and 4 use
    [n1 + ceil(n1*g/(n1+1)), (n1-1)*g + 1]; rank >= 5 on a Petri curve stops
    at n1 + floor(3g/2) unless g >= 2*n1 - 4 or the curve is general, in
    which case the full upper end applies.  May be empty.
    """
    if n1 < 2:
        raise ValueError("requires n1 >= 2, got %r" % (n1,))
    if not curve.satisfies("petri"):
        raise ValueError("the degree window applies to Petri or general curves")
    g = curve.genus
    from .exactnum import ceil_ratio

    if n1 == 2:
        lo = 2 + ceil_ratio(2 * g, 3)
        hi = g + 1
    elif n1 in (3, 4):
        lo = n1 + ceil_ratio(n1 * g, n1 + 1)
        hi = (n1 - 1) * g + 1
    else:
        lo = n1 + ceil_ratio(n1 * g, n1 + 1)
        if curve.satisfies("general") or g >= 2 * n1 - 4:
            hi = (n1 - 1) * g + 1
        else:
            hi = n1 + (3 * g) // 2
    return range(lo, hi + 1)


CITE_T10 = (
    "kernel bundles of general section subspaces of a single line bundle "
    "(Mistretta) paired with the Riemann-Roch section count"
)


def certify_t10(
    curve: CurveClass,
    n1: int,
    d1: int,
    k1: int,
    c: int,
    d: int,
    k: int,
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the universal locus via the rank-one kernel construction.

    The line bundle has degree d with a general section subspace of
    codimension c, 1 <= c <= g, and either d > 2g+2c, or d = 2g+2c with the
    conclusion capped at semistable unless the curve is known
    non-hyperelliptic.  The section count must satisfy
    k <= (d-g+1)(k1-n1) - c*k1 - d1, and B(n1, d1, k1) must be certified.
    """
    facts = facts if facts is not None else FactDatabase()
    if n1 < 2 or k1 <= n1:
        raise ValueError("requires k1 > n1 >= 2, got k1=%r n1=%r" % (k1, n1))
    g = curve.genus
    if not 1 <= c <= g:
        raise ValueError("codimension c must lie in [1, g], got %r" % (c,))
    degree_floor = 2 * g + 2 * c
    if d < degree_floor:
        _diag(
            diagnostics,
            "degree condition fails: need d >= 2g+2c = %d, got d=%d"
            % (degree_floor, d),
        )
        return None
    boundary = d == degree_floor
    max_k = (d - g + 1) * (k1 - n1) - c * k1 - d1
    if not k <= max_k:
        _diag(
            diagnostics,
            "section bound fails: need k <= %d, got k=%d" % (max_k, k),
        )
        return None
    if k < 1:
        _diag(diagnostics, "section count k must be at least 1")
        return None
    n2 = d - g - c
    d2 = -d
    if n2 < 1:
        _diag(diagnostics, "kernel rank d-g-c = %d is not positive" % (n2,))
        return None
    sub_b = _certify_b(curve, n1, d1, k1, facts, diagnostics)
    if sub_b is None:
        return None
    mistretta_strength = (
        "semistable" if boundary and curve.hyperelliptic != "no" else "stable"
    )
    strength = _min_strength(sub_b.conclusion.strength, mistretta_strength)
    e = d * (k1 - n1) - k
    e_bound = (g - 1) * (k1 - n1) + c * k1 + d1
    beta = beta_universal(g, (n1, d1), (n2, d2), k)
    notes = []
    if boundary and curve.hyperelliptic != "no":
        notes.append(
            "d = 2g+2c is the boundary case; the conclusion is semistable "
            "unless the curve is non-hyperelliptic"
        )
    conclusion = Conclusion(
        kind="universal", strength=strength, n1=n1, d1=d1, n2=n2, d2=d2, k=k
    )
    degree_hyp = (
        "d = %d > 2g+2c = %d" % (d, degree_floor)
        if not boundary
        else "d = %d = 2g+2c (boundary case)" % (d,)
    )
    return _finish(
        rule="t10",
        citation=CITE_T10,
        conclusion=conclusion,
        beta=beta,
        hypotheses=[
            Hypothesis("codimension c = %d lies in [1, %d]" % (c, g)),
            Hypothesis(degree_hyp),
            Hypothesis("section bound k = %d <= %d" % (k, max_k)),
            Hypothesis("kernel rank d-g-c = %d >= 1" % (n2,)),
        ],
        subcertificates=[sub_b],
        witnesses={
            "k": k,
            "max_k": max_k,
            "e": e,
            "e_lower_bound": e_bound,
            "e_bound_holds": e >= e_bound,
            "h0_tensor": chi_tensor(g, (n1, d1), (1, d)),
            "beta": beta,
            "beta_negative": beta < 0,
            "asympt_neg": asympt_neg(g, n1, d1, k1),
        },
        own_level="smooth",
        curve=curve,
        notes=notes,
        inputs={
            "n1": n1, "d1": d1, "k1": k1, "c": c, "d": d, "k": k,
        },
    )


CITE_C8_I = (
    "kernel bundle count with fixed excess at a degree not divisible by the "
    "rank"
)
CITE_C8_II = (
    "kernel bundle count with k1 = n1+1 on a Petri curve in the admissible "
    "degree window"
)


def certify_c8(
    curve: CurveClass,
    n1: int,
    d1: int,
    k1: int,
    c: int,
    d: int,
    e: int,
    facts: FactDatabase | None = None,
    *,
    diagnostics: Optional[list[str]] = None,
) -> Certificate | None:
    """Certify the universal locus via the fixed-excess rank-one kernel
    construction, k = d*(k1-n1) - e.

    Branch selection: with k1 = n1+1 on a Petri (or general) curve and d1 in
    the admissible window, the first-locus existence is itself certified;
    otherwise the non-divisibility branch applies and the first-locus
    existence is taken from the fact database or recorded as assumed.
    """
    facts = facts if facts is not None else FactDatabase()
    if n1 < 2 or k1 <= n1:
        raise ValueError("requires k1 > n1 >= 2, got k1=%r n1=%r" % (k1, n1))
    g = curve.genus
    if not 1 <= c <= g:
        raise ValueError("codimension c must lie in [1, g], got %r" % (c,))
    degree_floor = 2 * g + 2 * c
    if d < degree_floor:
        _diag(
            diagnostics,
            "degree condition fails: need d >= 2g+2c = %d, got d=%d"
            % (degree_floor, d),
        )
        return None
    boundary = d == degree_floor
    k = d * (k1 - n1) - e
    if k < 1:
        _diag(diagnostics, "excess too large: k = d*(k1-n1) - e = %d < 1" % (k,))
        return None
    n2 = d - g - c
    d2 = -d
    if n2 < 1:
        _diag(diagnostics, "kernel rank d-g-c = %d is not positive" % (n2,))
        return None

    mistretta_strength = (
        "semistable" if boundary and curve.hyperelliptic != "no" else "stable"
    )
    e_bound_i = (g - 1) * (k1 - n1) + c * k1 + d1
    beta = beta_universal(g, (n1, d1), (n2, d2), k)
    flag = asympt_neg(g, n1, d1, k1)
    base_witnesses = {
        "k": k,
        "e": e,
        "beta": beta,
        "beta_negative": beta < 0,
        "asympt_neg": flag,
    }
    degree_hyp = (
        "d = %d > 2g+2c = %d" % (d, degree_floor)
        if not boundary
        else "d = %d = 2g+2c (boundary case)" % (d,)
    )

    # Petri-window branch: the first locus is certified outright.
    if k1 == n1 + 1 and curve.satisfies("petri"):
        lower = line_bn_degree_bound(g, n1)
        upper = n1 + g + Fraction((n1 * n1 - n1 - 2) * g, 2 * (n1 - 1) * (n1 - 1))
        e_bound_ii = g - 1 + c * (n1 + 1) + d1
        if lower <= d1 and d1 < upper and e >= e_bound_ii:
            sub_b = bn_np1_nonempty(curve, n1, d1, facts, diagnostics=diagnostics)
            if sub_b is not None:
                strength = _min_strength(
                    sub_b.conclusion.strength, mistretta_strength
                )
                conclusion = Conclusion(
                    kind="universal", strength=strength,
                    n1=n1, d1=d1, n2=n2, d2=d2, k=k,
                )
                witnesses = dict(base_witnesses)
                witnesses.update({"branch": "petri-window", "e_lower_bound": e_bound_ii})
                return _finish(
                    rule="c8",
                    citation=CITE_C8_II,
                    conclusion=conclusion,
                    beta=beta,
                    hypotheses=[
                        Hypothesis("codimension c = %d lies in [1, %d]" % (c, g)),
                        Hypothesis(degree_hyp),
                        Hypothesis(
                            "degree window %s <= d1 = %d < %s" % (lower, d1, upper)
                        ),
                        Hypothesis("excess bound e = %d >= %d" % (e, e_bound_ii)),
                    ],
                    subcertificates=[sub_b],
                    witnesses=witnesses,
                    own_level="petri",
                    curve=curve,
                    notes=[],
                    inputs={
                        "n1": n1, "d1": d1, "k1": k1, "c": c, "d": d, "e": e,
                    },
                )

    # Non-divisibility branch.
    if d1 % n1 == 0:
        _diag(
            diagnostics,
            "no branch applies: d1 = %d is divisible by n1 = %d and the "
            "Petri-window branch did not fire" % (d1, n1),
        )
        return None
    if e < e_bound_i:
        _diag(
            diagnostics,
            "excess bound fails: need e >= %d, got e=%d" % (e_bound_i, e),
        )
        return None
    hypotheses = [
        Hypothesis("codimension c = %d lies in [1, %d]" % (c, g)),
        Hypothesis(degree_hyp),
        Hypothesis("d1 = %d is not divisible by n1 = %d" % (d1, n1)),
        Hypothesis("excess bound e = %d >= %d" % (e, e_bound_i)),
    ]
    subcerts: list[Certificate] = []
    sub_b = _certify_b(curve, n1, d1, k1, facts, None)
    b_strength = "stable"
    if sub_b is not None:
        subcerts.append(sub_b)
        b_strength = sub_b.conclusion.strength
    else:
        hypotheses.append(
            Hypothesis("B(%d,%d,%d) is nonempty" % (n1, d1, k1), status="assumed")
        )
    strength = _min_strength(b_strength, mistretta_strength)
    conclusion = Conclusion(
        kind="universal", strength=strength, n1=n1, d1=d1, n2=n2, d2=d2, k=k
    )
    witnesses = dict(base_witnesses)
    witnesses.update({"branch": "non-divisible", "e_lower_bound": e_bound_i})
    return _finish(
        rule="c8",
        citation=CITE_C8_I,
        conclusion=conclusion,
        beta=beta,
        hypotheses=hypotheses,
        subcertificates=subcerts,
        witnesses=witnesses,
        own_level="smooth",
        curve=curve,
        notes=[],
        inputs={"n1": n1, "d1": d1, "k1": k1, "c": c, "d": d, "e": e},
    )


# ---------------------------------------------------------------------------
# Revalidation


def _rerun_fact(curve: CurveClass, facts: FactDatabase, inputs: dict):
    kinds = (inputs["kind"],)
    for fact in facts.facts():
        if fact.kind in kinds and fact.matches(
            curve.genus, inputs["n"], inputs["d"], inputs["sections"]
        ):
            return _fact_certificate(fact, curve)
    return None


_RULE_RUNNERS = {
    "line": lambda curve, facts, inp: bn_line_nonempty(curve, inp["d"], inp["v"]),
    "np1": lambda curve, facts, inp: bn_np1_nonempty(
        curve, inp["n1"], inp["d1"], facts
    ),
    "s": lambda curve, facts, inp: s_nonempty(curve, tuple(inp["cs"]), facts),
    "fact": _rerun_fact,
    "phi": lambda curve, facts, inp: certify_phi(
        curve, tuple(inp["locus1"]), tuple(inp["cs"]), facts
    ),
    "rfold": lambda curve, facts, inp: certify_rfold(
        curve, tuple(inp["locus1"]), tuple(inp["cs"]), inp["r"], facts
    ),
    "elem": lambda curve, facts, inp: certify_elem(
        curve, tuple(inp["locus1"]), tuple(inp["cs"]), inp["r"], facts
    ),
    "t9": lambda curve, facts, inp: certify_t9(
        curve, tuple(inp["locus1"]), inp["n"], inp["d"], inp["v"]
    ),
    "t4": lambda curve, facts, inp: certify_t4(
        curve, inp["n1"], inp["d1"], inp["k1"], inp["n"], inp["e"], inp["f"],
        inp["d"], facts,
    ),
    "t10": lambda curve, facts, inp: certify_t10(
        curve, inp["n1"], inp["d1"], inp["k1"], inp["c"], inp["d"], inp["k"], facts
    ),
    "c8": lambda curve, facts, inp: certify_c8(
        curve, inp["n1"], inp["d1"], inp["k1"], inp["c"], inp["d"], inp["e"], facts
    ),
}


def revalidate(cert: Certificate, facts: FactDatabase | None = None) -> bool:
    """Re-run the producing rule from the certificate's stored inputs and
    compare the full serialized trees.  True only on exact agreement."""
    facts = facts if facts is not None else FactDatabase()
    runner = _RULE_RUNNERS.get(cert.rule)
    if runner is None:
        return False
    fresh = runner(cert.curve, facts, dict(cert.inputs))
    return fresh is not None and fresh.to_dict() == cert.to_dict()
