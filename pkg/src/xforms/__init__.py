"""Objective pattern algebra over binary vectors, X-form expressions, and perception machines."""

from .errors import (
    BoundTooSmall,
    DimensionMismatch,
    EmptyTarget,
    EnumerationGuard,
    FormSyntaxError,
    KindError,
    MixedLengths,
    NotSpatial,
    ParseDiagnostic,
    ParseError,
    PatternFormatError,
    WidthError,
    XFormError,
)
from .estimator import SpatialBitEncoder, XFormClassifier
from .expr import (
    MASK,
    SINGLETON,
    And,
    Interpretation,
    Kind,
    Leaf,
    Next,
    Not,
    Or,
    XForm,
    evaluate,
    footing_of,
    is_sx,
    is_tx,
    kind_of,
)
from .machine import (
    PerceptionMachine,
    RunTrace,
    compile_form,
    find_perception_bit,
    find_temporal_bit,
    run,
    run_stream,
)
from .parser import parse, to_text
from .pattern import (
    DEFAULT_CAP,
    BasePattern,
    ObjectivePattern,
    SequenceInstance,
    and_intersect,
    dumps_pattern,
    enumerate_universe,
    is_spatial,
    load_pattern,
    loads_pattern,
    next_concat,
    not_bounded,
    not_spatial,
    or_union,
)
from .synthesis import (
    SynthResult,
    simplify,
    synth_sx_mask,
    synth_sx_singleton,
    synth_tx_projection,
    synth_x,
    synthesize,
)

__version__ = "0.1.0"
