"""cipherquest: a spy-themed cryptography training game.

Library layers, bottom to top: ``crypto`` (toy cipher mechanisms),
``cipherscript`` (the pipeline DSL students write in later levels),
``puzzles`` (instance generation, grading, hints, reference solver),
``campaign``/``profiles`` (level graph, codex, persistence), ``service``
(HTTP/JSON API) and ``cli`` (instructor tooling and the headless bot).
"""

__version__ = "0.1.0"
