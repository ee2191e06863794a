"""End-to-end recognition: label, then certify the labeling."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import NotPartialCube
from .labeler import EdgeClassPartition, Phase1Stats, SemicubeLabeling, label_all
from .verifier import Phase2Stats, verify


@dataclass
class Recognition:
    is_partial_cube: bool
    labeling: SemicubeLabeling | None = None
    partition: EdgeClassPartition | None = None
    refusal: NotPartialCube | None = None
    phase1: Phase1Stats | None = None
    phase2: Phase2Stats | None = None
    seconds: float = 0.0

    @property
    def dimension(self):
        return self.labeling.dimension if self.labeling is not None else None

    @property
    def reason(self):
        return self.refusal.reason if self.refusal is not None else None

    def __bool__(self):
        return self.is_partial_cube


def recognize(g, trace=None):
    """Decide whether ``g`` is a partial cube.

    On success the result carries the labeling and edge partition; on
    refusal, the :class:`NotPartialCube` that ended the run.
    """
    start = time.perf_counter()
    phase1 = Phase1Stats()
    try:
        labeling, partition = label_all(g, phase1)
        phase2 = verify(g, labeling, partition, trace=trace)
    except NotPartialCube as refusal:
        return Recognition(False, refusal=refusal, phase1=phase1,
                           seconds=time.perf_counter() - start)
    return Recognition(True, labeling, partition, phase1=phase1, phase2=phase2,
                       seconds=time.perf_counter() - start)


def is_partial_cube(g):
    return recognize(g).is_partial_cube
