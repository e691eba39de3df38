"""Singularity type labels and their canonical text rendering."""

from dataclasses import dataclass

FAMILIES = ("I", "T", "Jprime", "Kprime", "Kb", "L", "Lb", "M")

# families where the listed normal form carries a continuous modulus
_MODULUS_TYPES = {
    ("I", (1, 0)), ("I", (1, 0, 1)),
    ("T", (2, 2, 2, 2)),
    ("Kprime", (1, 0)), ("Kprime", (1, 0, 1)),
    ("L", (1, 0)), ("L", (1, 0, 1)),
    ("M", (1, 0)), ("M", (1, 0, 1)),
}


@dataclass(frozen=True)
class SingularityType:
    family: str
    indices: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    @property
    def has_modulus(self):
        if self.family == "Jprime" and len(self.indices) == 2 \
                and self.indices[0] <= 6 and self.indices[1] == 0:
            return True
        return (self.family, self.indices) in _MODULUS_TYPES

    def render(self):
        sub = ",".join(str(i) for i in self.indices)
        if self.family == "I":
            return f"I_{{{sub}}}"
        if self.family == "T":
            return f"T_{{{sub}}}"
        if self.family == "Jprime":
            return f"J'_{{{sub}}}"
        if self.family == "Kprime":
            return f"K'_{{{sub}}}"
        if self.family == "Kb":
            return f"K^b_{{{sub}}}"
        if self.family == "L":
            return f"L_{{{sub}}}"
        if self.family == "Lb":
            return f"L^b_{{{sub}}}"
        return f"M_{{{sub}}}"

    def __str__(self):
        return self.render()
