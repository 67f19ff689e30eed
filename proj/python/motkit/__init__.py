"""Online multi-object tracking over bounding-box detections.

The heavy lifting lives in the compiled extension: a constant-velocity
Kalman box filter, optimal overlap assignment, track lifecycle management,
MOT text I/O, CLEAR-style evaluation, and synthetic scene generation.
"""

from ._motkit import *  # noqa: F401,F403
from ._motkit import __version__  # noqa: F401
