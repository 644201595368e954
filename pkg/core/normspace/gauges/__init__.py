"""
Norm evaluators ("gauges").

Every gauge evaluates the norm along the last axis of its input so the search
and energy code can hand over whole grids of vectors at once.
"""
