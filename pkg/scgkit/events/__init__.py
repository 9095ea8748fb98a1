"""
scgkit Events Module.

This module streams window-tagged progress events from the delineation
pipeline.

Components:
    - DelineationEvent: Stage report with its window index
    - DelineationStage: Pipeline stage enum
    - EventStatus: Event status enum
    - EventEmitter: Fans events out to callbacks
    - DelineationEventCollector: Collects events, groups them by stage or window

Example:
    >>> from scgkit.events import EventEmitter
    >>> emitter = EventEmitter()
    >>> emitter.add_callback(lambda e: print(e.window, e.message))
    >>> emitter.begin_window(0)
"""

from .events import (
    DelineationEvent,
    DelineationStage,
    EventStatus,
    EventEmitter,
    EventCallback,
    DelineationEventCollector,
)

__all__ = [
    "DelineationEvent",
    "DelineationStage",
    "EventStatus",
    "EventEmitter",
    "EventCallback",
    "DelineationEventCollector",
]
