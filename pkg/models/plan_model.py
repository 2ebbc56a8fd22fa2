"""
Plan Model
Lasso-shaped plans, run fragments and per-formula verdicts
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Fragment:
    """Run segment between two consecutive accepting positions (inclusive)"""
    start: int
    end: int
    weight: int


@dataclass(frozen=True)
class Lasso:
    """
    Ultimately periodic state sequence prefix · cycle^ω

    The cycle lists its root first and does not repeat it at the end;
    the last cycle state steps back to the root.
    """
    prefix: tuple = ()
    cycle: tuple = ()

    def unrolled(self, times: int) -> "Lasso":
        """Same infinite sequence with the cycle written out `times` times"""
        return Lasso(self.prefix, tuple(self.cycle) * times)

    def positions(self) -> list:
        return list(self.prefix) + list(self.cycle)

    def __len__(self) -> int:
        return len(self.prefix) + len(self.cycle)


@dataclass(frozen=True)
class FormulaVerdict:
    index: int
    text: str
    reward: int
    satisfied: bool


@dataclass(frozen=True)
class TraceScore:
    """Reward of a trace and the verdict of every formula (original order)"""
    reward: int
    verdicts: tuple[FormulaVerdict, ...] = ()

    @property
    def satisfied_indices(self) -> list[int]:
        return [v.index for v in self.verdicts if v.satisfied]


@dataclass(frozen=True)
class LassoPlan:
    """
    Maximal-reward plan

    `prefix` and `cycle` hold product state ids; `trace` is their projection onto the
    transition system. `fallback` marks the zero-reward arbitrary trace returned when
    the product has no accepting lasso.
    """
    reward: int
    trace: Lasso
    prefix: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()
    verdicts: tuple[FormulaVerdict, ...] = ()
    fragments: tuple[Fragment, ...] = field(default=())
    fallback: bool = False

    @property
    def satisfied_indices(self) -> list[int]:
        return [v.index for v in self.verdicts if v.satisfied]

    @property
    def is_fallback(self) -> bool:
        return self.fallback


@dataclass(frozen=True)
class OracleResult:
    """
    Subset-enumeration optimum

    `targeted` holds the original indices of the witness subset, `incidental` the
    formulas the witness trace satisfies on top of it.
    """
    reward: int
    trace: Lasso
    targeted: tuple[int, ...] = ()
    incidental: tuple[int, ...] = ()
    verdicts: tuple[FormulaVerdict, ...] = ()
    subsets_checked: int = 0
