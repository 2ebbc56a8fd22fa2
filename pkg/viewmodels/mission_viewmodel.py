"""
Mission ViewModel - MVVM Pattern
Presentation logic between the command line view and the planning services
"""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from models import (
    CheckResult, GenerateResult, InputFileError, LTLMVPError, PlannerSettings, PlanResult,
    RescueConfig, ResultStatus, TranslateResult,
)
from models.transition_system import MissionSpec, TransitionSystem
from services import (
    DiagnosticHandler, brute_force_plan, degeneralize, generate_random_instance,
    generate_rescue_mission, load_model, load_spec, ltl_to_gba, make_nonblocking,
    parse_formula, plan_instance, prepare_product, serialize_model, serialize_spec, trace_reward,
)
from utilities import default_scenario_path
from views import dump_automaton, parse_plan_file, to_dot


log = logging.getLogger("LTLMVP")


class MissionViewModel:
    """
    ViewModel for the command line
    Runs one pipeline per call and reports through Result dataclasses; domain
    errors never escape to the view.
    """

    def __init__(self, settings: Optional[PlannerSettings] = None):
        self.settings = settings or PlannerSettings()

    @contextmanager
    def _collect_warnings(self, result) -> Iterator[None]:
        """Attach warnings logged during the call to the result"""
        handler = DiagnosticHandler(lambda message, _: result.warnings.append(message))
        logger = logging.getLogger("LTLMVP")
        logger.addHandler(handler)
        try:
            yield
        except LTLMVPError as e:
            log.debug(f"{type(e).__name__}: {e.message}")
            self._fail(result, e)
        except OSError as e:
            self._fail(result, InputFileError(f"{e.filename or ''}: {e.strerror or e}"))
        finally:
            logger.removeHandler(handler)

    @staticmethod
    def _fail(result, error: LTLMVPError):
        result.status = ResultStatus.ERROR
        result.error = error
        result.message = error.diagnostic()

    def plan(
        self,
        model_path: str | Path,
        spec_path: str | Path,
        oracle: bool = False,
        dot_dir: Optional[str | Path] = None,
    ) -> PlanResult:
        """
        Plan a maximal-reward trace for a model and a specification

        Args:
            model_path: Model file
            spec_path: Specification file
            oracle: Cross-check the reward with subset enumeration
            dot_dir: Directory receiving DOT files of every automaton

        Returns:
            PlanResult; status MISMATCH when the oracle disagrees
        """
        result = PlanResult()
        with self._collect_warnings(result):
            ts = load_model(model_path)
            spec = load_spec(spec_path)
            artifacts = prepare_product(ts, spec, self.settings)
            result.plan = plan_instance(ts, artifacts.spec, self.settings, artifacts)
            result.total_reward = artifacts.spec.total_reward
            result.artifacts = artifacts
            if dot_dir is not None:
                result.written = self._write_dots(Path(dot_dir), artifacts)
            if oracle:
                result.oracle = brute_force_plan(ts, artifacts.spec, self.settings)
                if result.oracle.reward != result.plan.reward:
                    log.warning(
                        f"Oracle reward {result.oracle.reward} differs from planner reward {result.plan.reward}"
                    )
                    result.status = ResultStatus.MISMATCH
                    result.message = (
                        f"error[reward-mismatch]: planner found {result.plan.reward}, "
                        f"oracle found {result.oracle.reward}"
                    )
        return result

    def _write_dots(self, out_dir: Path, artifacts) -> list[Path]:
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for idx, gba in enumerate(artifacts.gbas):
            written.append(out_dir / f"gba_{idx}.dot")
            written[-1].write_text(to_dot(gba, f"gba_{idx}"), encoding="utf-8")
        written.append(out_dir / "weighted.dot")
        written[-1].write_text(to_dot(artifacts.wba, "weighted"), encoding="utf-8")
        written.append(out_dir / "product.dot")
        written[-1].write_text(to_dot(artifacts.product, "product"), encoding="utf-8")
        log.info(f"Wrote {len(written)} DOT files to {out_dir}")
        return written

    def translate(
        self,
        formula_text: str,
        nonblocking: bool = False,
        degeneralized: bool = False,
        dot: bool = False,
    ) -> TranslateResult:
        """Translate one formula and render its automaton"""
        result = TranslateResult()
        with self._collect_warnings(result):
            formula = parse_formula(formula_text)
            automaton = ltl_to_gba(formula, self.settings.max_states)
            if nonblocking:
                automaton = make_nonblocking(automaton)
            if degeneralized:
                automaton = degeneralize(automaton)
            result.dump = dump_automaton(automaton)
            if dot:
                result.dot = to_dot(automaton, formula_text)
        return result

    def check(self, model_path: str | Path, spec_path: str | Path, plan_path: str | Path) -> CheckResult:
        """Re-score a plan file against a model and a specification"""
        result = CheckResult()
        with self._collect_warnings(result):
            ts = load_model(model_path)
            spec = load_spec(spec_path)
            if self.settings.lexicographic:
                spec = spec.lexicographic()
            plan_path = Path(plan_path)
            plan_file = parse_plan_file(plan_path.read_text(encoding="utf-8"), str(plan_path))
            result.claimed_reward = plan_file.reward
            result.score = trace_reward(ts, spec, plan_file.trace)
            if result.score.reward != plan_file.reward:
                result.status = ResultStatus.MISMATCH
                result.message = (
                    f"error[reward-mismatch]: plan claims {plan_file.reward}, trace earns {result.score.reward}"
                )
        return result

    def generate_rescue(self, config_path: Optional[str | Path], out_dir: str | Path) -> GenerateResult:
        """Write the model and specification of a rescue scenario"""
        result = GenerateResult()
        with self._collect_warnings(result):
            config = RescueConfig.load(config_path or default_scenario_path())
            ts, spec = generate_rescue_mission(config)
            self._write_instance(result, Path(out_dir), "rescue", ts, spec)
        return result

    def generate_random(
        self,
        seed: int,
        out_dir: str | Path,
        max_states: int = 6,
        num_props: int = 3,
        num_formulas: int = 3,
    ) -> GenerateResult:
        """Write a seeded random instance"""
        result = GenerateResult()
        with self._collect_warnings(result):
            ts, spec = generate_random_instance(seed, max_states, num_props, num_formulas)
            self._write_instance(result, Path(out_dir), f"random_{seed}", ts, spec)
        return result

    def _write_instance(self, result: GenerateResult, out_dir: Path, stem: str, ts: TransitionSystem, spec: MissionSpec):
        out_dir.mkdir(parents=True, exist_ok=True)
        result.model_path = out_dir / f"{stem}.model"
        result.spec_path = out_dir / f"{stem}.spec"
        result.model_path.write_text(serialize_model(ts), encoding="utf-8")
        result.spec_path.write_text(serialize_spec(spec), encoding="utf-8")
        result.states = len(ts.states)
        result.formulas = len(spec)
        log.info(f"Wrote {result.model_path} and {result.spec_path}")
