"""
Event system re-exports for core module.

This module re-exports the event system from scgkit.events
to maintain consistent imports from the core module.
"""

from ..events import (
    DelineationStage,
    EventStatus,
    DelineationEvent,
    EventEmitter,
    DelineationEventCollector,
    EventCallback,
)

__all__ = [
    "DelineationStage",
    "EventStatus",
    "DelineationEvent",
    "EventEmitter",
    "DelineationEventCollector",
    "EventCallback",
]
