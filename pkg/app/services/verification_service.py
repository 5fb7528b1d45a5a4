"""Verification service: exhaustive and seeded suites over the surgery theorems."""

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from typing import Any, NoReturn

from pydantic import BaseModel, ConfigDict, Field

from app.exceptions import DomainError, SuiteFailure
from app.models.knot_complex import KnotComplex
from app.models.staircase import StaircaseSpec
from app.repositories.complex_repo import ComplexRepository
from app.services.staircase_service import StaircaseService
from app.services.surgery_service import SurgeryService
from app.utils.sampling import random_symmetric_complex

logger = logging.getLogger(__name__)


class SuiteName(StrEnum):
    SMALL_SURGERY = "small-surgery"
    LARGE_FORWARD = "large-forward"
    CONVERSE = "converse"
    CRITERION = "criterion"
    REDUCED_CONE = "reduced-cone"
    IDENTIFICATION = "identification"


class InstanceSource(StrEnum):
    STAIRCASES = "staircases"
    RANDOM = "random"
    BOTH = "both"


class SuiteParams(BaseModel):
    """Instance selection and bounds for a suite run."""

    model_config = ConfigDict(frozen=True)

    max_genus: int = Field(default=3, ge=0)
    max_n: int = Field(default=10, ge=1)
    source: InstanceSource = InstanceSource.STAIRCASES
    random_count: int = Field(default=0, ge=0)
    seed: int = 0
    dim_bound: int = Field(default=9, ge=1)
    d_tops: tuple[int, ...] = (0,)
    timings: bool = False


class SuiteReport(BaseModel):
    """Counts for one suite; a report exists only when the suite passed."""

    suite: SuiteName
    instances: int
    checks: int
    skipped: int
    passed: bool = True
    elapsed_seconds: float | None = None


@dataclass(frozen=True)
class SuiteInstance:
    label: str
    knot: KnotComplex
    spec: StaircaseSpec | None = None


class _Tally:
    def __init__(self) -> None:
        self.checks = 0
        self.skipped = 0


class VerificationService:
    """Service running verification suites over staircases and random complexes."""

    def __init__(self, params: SuiteParams):
        """Initialize service with suite parameters."""
        self.params = params
        self.staircases = StaircaseService()
        self.repository = ComplexRepository()

    def instances(self) -> list[SuiteInstance]:
        """Instances in canonical order: staircases first, then random by seed."""
        params = self.params
        result: list[SuiteInstance] = []
        if params.source in (InstanceSource.STAIRCASES, InstanceSource.BOTH):
            specs = self.staircases.enumerate_staircases(
                params.max_genus, params.d_tops
            )
            for spec in specs:
                knot = self.staircases.make_staircase(spec)
                result.append(SuiteInstance(knot.name, knot, spec))
        if params.source in (InstanceSource.RANDOM, InstanceSource.BOTH):
            for i in range(params.random_count):
                seed = params.seed + i
                knot = random_symmetric_complex(
                    params.max_genus, params.dim_bound, seed
                )
                result.append(SuiteInstance(knot.name, knot))
        return result

    def run(self, suite: SuiteName) -> SuiteReport:
        """
        Run one suite over every instance.

        Raises:
            SuiteFailure: on the first counterexample, carrying it serialized
        """
        check: Callable[[SuiteInstance, SurgeryService, _Tally], None] = {
            SuiteName.SMALL_SURGERY: self._small_surgery,
            SuiteName.LARGE_FORWARD: self._large_forward,
            SuiteName.CONVERSE: self._converse,
            SuiteName.CRITERION: self._criterion,
            SuiteName.REDUCED_CONE: self._reduced_cone,
            SuiteName.IDENTIFICATION: self._identification,
        }[suite]
        started = time.perf_counter()
        tally = _Tally()
        instances = self.instances()
        for instance in instances:
            logger.debug("suite %s: instance %s", suite, instance.label)
            try:
                check(instance, SurgeryService(instance.knot), tally)
            except SuiteFailure:
                raise
            except DomainError as exc:
                self._fail(suite, instance, f"{exc.code}: {exc.detail}", **exc.context)
        elapsed = time.perf_counter() - started
        logger.info(
            "suite %s passed: %d instances, %d checks, %d skipped",
            suite,
            len(instances),
            tally.checks,
            tally.skipped,
        )
        return SuiteReport(
            suite=suite,
            instances=len(instances),
            checks=tally.checks,
            skipped=tally.skipped,
            elapsed_seconds=round(elapsed, 3) if self.params.timings else None,
        )

    def _fail(
        self, suite: SuiteName, instance: SuiteInstance, detail: str, **context: Any
    ) -> NoReturn:
        logger.warning("suite %s failed on %s: %s", suite, instance.label, detail)
        raise SuiteFailure(
            f"suite {suite} failed on {instance.label}: {detail}",
            suite=str(suite),
            instance=instance.label,
            counterexample=self.repository.serialize(instance.knot).model_dump(
                mode="json"
            ),
            **context,
        )

    def _coefficients(self, low: int) -> range:
        return range(max(1, low), self.params.max_n + 1)

    def _small_surgery(
        self, instance: SuiteInstance, surgery: SurgeryService, tally: _Tally
    ) -> None:
        g = surgery.genus
        if g == 0:
            tally.skipped += 1
            return
        for n in range(1, min(2 * g, self.params.max_n + 1)):
            certificate = surgery.is_simple(n)
            tally.checks += 1
            if certificate.simple or certificate.hfk_total <= certificate.hf_total:
                self._fail(
                    SuiteName.SMALL_SURGERY,
                    instance,
                    f"n={n} < 2g={2 * g} but hfk {certificate.hfk_total} "
                    f"vs hf {certificate.hf_total}",
                    n=n,
                )

    def _large_forward(
        self, instance: SuiteInstance, surgery: SurgeryService, tally: _Tally
    ) -> None:
        complexes = surgery.complexes
        if complexes.homology_rank() != 1:
            tally.skipped += 1
            return
        g = surgery.genus
        nonzero = [s for s in range(-g + 1, g + 1) if not surgery.epsilon(s).vanishes]
        tally.checks += 1
        for n in self._coefficients(2 * g):
            certificate = surgery.is_simple(n)
            tally.checks += 1
            if certificate.simple == bool(nonzero):
                self._fail(
                    SuiteName.LARGE_FORWARD,
                    instance,
                    f"n={n}: simple={certificate.simple} but nonzero ε at {nonzero}",
                    n=n,
                )
        if nonzero:
            logger.debug("%s has nonzero ε at %s", instance.label, nonzero)
            return
        recognized = self.staircases.recognize_staircase(instance.knot)
        if not isinstance(recognized, StaircaseSpec):
            self._fail(
                SuiteName.LARGE_FORWARD,
                instance,
                f"every ε vanishes but recognition failed: {recognized.reason}",
            )
        if instance.spec is not None and recognized != instance.spec:
            self._fail(
                SuiteName.LARGE_FORWARD,
                instance,
                f"recognized {recognized.steps} with d_top {recognized.d_top}",
            )

    def _converse(
        self, instance: SuiteInstance, surgery: SurgeryService, tally: _Tally
    ) -> None:
        if instance.spec is None and not isinstance(
            self.staircases.recognize_staircase(instance.knot), StaircaseSpec
        ):
            tally.skipped += 1
            return
        poly = self.staircases.alexander(instance.knot)
        tally.checks += 1
        if not self.staircases.is_alternating(poly) or poly.value_at_one() != 1:
            self._fail(
                SuiteName.CONVERSE,
                instance,
                f"Alexander polynomial {self.staircases.render(poly)} is not a "
                "staircase polynomial",
            )
        for n in self._coefficients(2 * surgery.genus):
            certificate = surgery.is_simple(n)
            tally.checks += 1
            if not certificate.simple or not surgery.is_lspace(n):
                self._fail(
                    SuiteName.CONVERSE,
                    instance,
                    f"n={n} ≥ 2g but the surgery is not a simple L-space surgery",
                    n=n,
                )

    def _criterion(
        self, instance: SuiteInstance, surgery: SurgeryService, tally: _Tally
    ) -> None:
        # is_simple raises CriterionMismatch when the two criteria disagree.
        for n in self._coefficients(1):
            surgery.is_simple(n)
            tally.checks += 1

    def _reduced_cone(
        self, instance: SuiteInstance, surgery: SurgeryService, tally: _Tally
    ) -> None:
        for n in self._coefficients(1):
            for s in surgery.support(n):
                full = surgery.cone_rank(n, s)
                reduced = surgery.hfk_rank_reduced(n, s)
                tally.checks += 1
                if full != reduced:
                    self._fail(
                        SuiteName.REDUCED_CONE,
                        instance,
                        f"C_{n}({s}) has rank {full}, reduced cone {reduced}",
                        n=n,
                        s=s,
                    )

    def _identification(
        self, instance: SuiteInstance, surgery: SurgeryService, tally: _Tally
    ) -> None:
        g = surgery.genus
        if g == 0 or surgery.complexes.homology_rank() != 1:
            tally.skipped += 1
            return
        for s in range(-g + 1, g + 1):
            # large_surgery_ranks raises SurgeryInvariantError on a mismatch.
            surgery.large_surgery_ranks(2 * g, s)
            tally.checks += 1


def run_suite(suite: SuiteName, params: SuiteParams) -> SuiteReport:
    """Run one suite with the given parameters."""
    return VerificationService(params).run(suite)
