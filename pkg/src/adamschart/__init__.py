"""Adams E2 charts over the Steenrod algebra and Hurewicz vanishing for covers of BO."""

from .chart import Chart, chart_from_ext, connective_cover_chart
from .fpmodule import FPModule, module_dim, preset_module
from .hurewicz import apply_criterion, annotate_delta, bo_cover_workflow, stage_annotation
from .resolve import ext_dims, minimal_resolution

__all__ = [
    "Chart",
    "FPModule",
    "annotate_delta",
    "apply_criterion",
    "bo_cover_workflow",
    "chart_from_ext",
    "connective_cover_chart",
    "ext_dims",
    "minimal_resolution",
    "module_dim",
    "preset_module",
    "stage_annotation",
]
