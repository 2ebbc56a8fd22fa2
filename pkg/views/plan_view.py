"""
Plan View - plan files, verdict tables and oracle reports

Plan file:
    reward: 11
    prefix: s0 s3
    cycle: s5 s7
    satisfied: 0 2
    product-prefix: 0 4            (optional product-level trace)
    product-cycle: 9[0.0] 12[1.1]
"""

from dataclasses import dataclass
from typing import Optional

from models.errors import ModelParseError
from models.plan_model import FormulaVerdict, Lasso, LassoPlan, OracleResult
from models.weighted_model import WeightedProductAutomaton


@dataclass(frozen=True)
class PlanFile:
    """Contents of a plan file as read back by `check`"""
    reward: int
    trace: Lasso
    satisfied: Optional[tuple[int, ...]] = None


def serialize_plan(plan: LassoPlan, product: Optional[WeightedProductAutomaton] = None) -> str:
    """
    Plan file text

    Args:
        plan: Planner result
        product: When given, append the product-level trace with component tags
    """
    lines = [
        f"reward: {plan.reward}",
        f"prefix: {' '.join(plan.trace.prefix)}".rstrip(),
        f"cycle: {' '.join(plan.trace.cycle)}",
        f"satisfied: {' '.join(str(i) for i in plan.satisfied_indices)}".rstrip(),
    ]
    if product is not None:
        lines.append(f"product-prefix: {' '.join(f'{p}[{product.tags[p]}]' for p in plan.prefix)}".rstrip())
        lines.append(f"product-cycle: {' '.join(f'{p}[{product.tags[p]}]' for p in plan.cycle)}".rstrip())
    return "\n".join(lines) + "\n"


def parse_plan_file(text: str, source: str = "") -> PlanFile:
    """
    Read a plan file; product-level lines are ignored

    Raises:
        ModelParseError: Missing reward or cycle, unknown key, bad integer
    """
    fields: dict[str, tuple[int, str]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise ModelParseError(f"Expected '<key>: <value>', got {line!r}", number, source)
        if key.startswith("product-"):
            continue
        if key not in ("reward", "prefix", "cycle", "satisfied"):
            raise ModelParseError(f"Unknown plan key {key!r}", number, source)
        if key in fields:
            raise ModelParseError(f"Plan key {key!r} given twice", number, source)
        fields[key] = (number, value.strip())

    for required in ("reward", "cycle"):
        if required not in fields:
            raise ModelParseError(f"Plan file lacks '{required}:'", None, source)
    number, value = fields["reward"]
    try:
        reward = int(value)
    except ValueError:
        raise ModelParseError(f"Reward {value!r} is not an integer", number, source) from None
    satisfied = None
    if "satisfied" in fields:
        number, value = fields["satisfied"]
        try:
            satisfied = tuple(int(i) for i in value.split())
        except ValueError:
            raise ModelParseError(f"Formula indices {value!r} must be integers", number, source) from None
    prefix = tuple(fields.get("prefix", (0, ""))[1].split())
    cycle = tuple(fields["cycle"][1].split())
    return PlanFile(reward, Lasso(prefix, cycle), satisfied)


def verdict_table(verdicts: tuple[FormulaVerdict, ...]) -> str:
    """Fixed-width per-formula table in original order"""
    rows = [("#", "reward", "sat", "formula")]
    rows += [(str(v.index), str(v.reward), "yes" if v.satisfied else "no", v.text) for v in verdicts]
    widths = [max(len(row[col]) for row in rows) for col in range(3)]
    lines = [
        f"{idx:>{widths[0]}}  {reward:>{widths[1]}}  {sat:<{widths[2]}}  {text}"
        for idx, reward, sat, text in rows
    ]
    return "\n".join(lines) + "\n"


def oracle_report(plan: LassoPlan, oracle: OracleResult) -> str:
    """Planner and brute-force results side by side with a match verdict"""
    verdict = "match" if plan.reward == oracle.reward else "MISMATCH"
    lines = [
        f"planner-reward: {plan.reward}",
        f"oracle-reward: {oracle.reward}",
        f"oracle-targeted: {' '.join(map(str, oracle.targeted))}".rstrip(),
        f"oracle-incidental: {' '.join(map(str, oracle.incidental))}".rstrip(),
        f"oracle-subsets-checked: {oracle.subsets_checked}",
        f"verdict: {verdict}",
    ]
    return "\n".join(lines) + "\n"
