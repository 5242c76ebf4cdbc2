"""CSV-to-figure rendering for the laqc sweep presets."""

from .render import FigureJob, PRESET_SCHEMAS, SchemaError, render, render_all

__all__ = ["FigureJob", "PRESET_SCHEMAS", "SchemaError", "render", "render_all"]
