"""Character -> f_* L -> MC_{-1} -> Cayley parameters, and the recorded survey of matches."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .cayley import CayleyParams, TraceField, match_cayley, trace_field
from .convolution import CoverCharacter, characters_of_exact_order, induced_pushforward, middle_convolve
from .exactalg import totient
from .monodromy import MonodromyTuple, is_irreducible, star_check, trace_coordinates

MATCHES_FILE = "observed_matches.json"


@dataclass(frozen=True)
class RoundTrip:
    character: CoverCharacter
    convolved: MonodromyTuple
    star: bool
    irreducible: bool
    match: CayleyParams | None
    trace_field: TraceField

    @property
    def expected_degree(self) -> int:
        return max(1, totient(self.character.exact_order) // 2)

    def point(self) -> tuple:
        return tuple(v.descend() for v in trace_coordinates(self.convolved).xyz)

    def to_json(self) -> dict:
        return {
            "m": self.character.m, "a": self.character.a, "b": self.character.b,
            "xyz": [str(v) for v in self.point()],
            "star": self.star,
            "match": None if self.match is None else self.match.to_json(),
            "trace_field_degree": self.trace_field.degree,
        }


def roundtrip(chi: CoverCharacter, denominator_bound: int = 30) -> RoundTrip:
    V = middle_convolve(induced_pushforward(chi))
    star = star_check(V)
    irred = is_irreducible(V)
    match = match_cayley(V, denominator_bound) if star and irred else None
    return RoundTrip(chi, V, star, irred, match, trace_field(V))


def survey(max_order: int, denominator_bound: int = 30) -> list[RoundTrip]:
    """Round trips for every character of exact order 2..max_order."""
    return [roundtrip(chi, denominator_bound)
            for m in range(2, max_order + 1) for chi in characters_of_exact_order(m)]


def load_observed_matches() -> dict:
    return json.loads(resources.files("cayleymc").joinpath("data", MATCHES_FILE).read_text())


def survey_json(max_order: int, denominator_bound: int = 30) -> dict:
    return {"max_order": max_order, "denominator_bound": denominator_bound,
            "entries": [r.to_json() for r in survey(max_order, denominator_bound)]}
