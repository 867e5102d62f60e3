#!/usr/bin/env python3
"""Regenerates the JSON rhythm fixtures from the rhythm transcriptions below.

Durations are in sixteenth notes; a negative value is a rest. Pitch is not
encoded. Ticks per quarter = 480, so one sixteenth = 120 ticks.
"""
import json
import pathlib

TPQ = 480
SIXTEENTH = TPQ // 4
HERE = pathlib.Path(__file__).resolve().parent

# Mozart, Piano Sonata in A major K. 331, first movement, theme (6/8).
# Right hand (melody), written measures 1-18.
K331_RIGHT = {
    1: [3, 1, 2, 4, 2],    # c#8. d16 c#8 e4 e8
    2: [3, 1, 2, 4, 2],    # b8. c#16 b8 d4 d8
    3: [4, 2, 4, 2],       # a4 a8 b4 c#8
    4: [2, 2, 2, 4, 2],    # half cadence
    5: [3, 1, 2, 4, 2],
    6: [3, 1, 2, 4, 2],
    7: [4, 2, 4, 2],
    8: [2, 2, 2, 4, -2],   # cadence: quarter note then eighth rest
    9: [3, 1, 2, 4, 2],    # B: variation of the opening figure
    10: [3, 1, 2, 4, 2],
    11: [3, 1, 2, 4, 2],
    12: [2, 2, 2, 4, -2],  # half cadence
    13: [3, 1, 2, 4, 2],   # return of the theme
    14: [3, 1, 2, 4, 2],
    15: [4, 2, 4, 2],
    16: [2, 2, 2, 4, 2],
    17: [4, 2, 4, 2],      # extended cadence
    18: [2, 2, 2, 4, -2],
}

# Left hand: bass + chord, quarter-eighth twice per bar; cadence bars rest on
# the last eighth.
LH_PLAIN = [4, 2, 4, 2]
LH_CADENCE = [4, 2, 4, -2]
K331_LEFT = {m: (LH_CADENCE if m in (4, 8, 12, 18) else LH_PLAIN) for m in range(1, 19)}

# Performance order with both repeats taken: ||: A (1-8) :||: B (9-18) :||
K331_ORDER = list(range(1, 9)) * 2 + list(range(9, 19)) * 2

K331_SECTIONS = [
    (0, "A1", "A"), (4, "A2", "A"), (8, "A1", "A"), (12, "A2", "A"),
    (16, "B1", "B"), (20, "B2", "B"), (26, "B1", "B"), (30, "B2", "B"),
]

MEASURE_6_8 = 12  # sixteenths


def events(bars, order):
    out = []
    t = 0
    for m in order:
        pattern = bars[m]
        assert sum(abs(d) for d in pattern) == MEASURE_6_8, (m, pattern)
        for d in pattern:
            if d > 0:
                out.append({"onset": t * SIXTEENTH, "duration": d * SIXTEENTH})
            t += abs(d)
    return out


def write(name, doc):
    path = HERE / name
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print("wrote", path)


def six_eight(order, title, annotations):
    return {
        "title": title,
        "ticks_per_quarter": TPQ,
        "time_signatures": [{"measure": 0, "numerator": 6, "denominator": 8}],
        "voices": [events(K331_RIGHT, order), events(K331_LEFT, order)],
        "annotations": annotations,
    }


def main():
    write("mozart_k331_theme.json", six_eight(
        K331_ORDER, "Mozart K331 i, theme (repeats taken)",
        [{"measure": m, "label": l, "section": s} for m, l, s in K331_SECTIONS]))
    write("mozart_k331_m1-4.json", six_eight(
        [1, 2, 3, 4], "Mozart K331 i, measures 1-4",
        [{"measure": 0, "label": "theme", "section": "A"},
         {"measure": 1, "label": "theme-V6", "section": "A"},
         {"measure": 2, "label": "transition", "section": "A"},
         {"measure": 3, "label": "cadence", "section": "A"}]))
    write("mozart_k331_m3-4.json", six_eight(
        [3, 4], "Mozart K331 i, measures 3-4", []))
    # Strictly periodic long-short rhythm (quarter, eighth) in 6/8, 16 bars.
    write("regular_siciliano.json", {
        "title": "Regular quarter-eighth etude",
        "ticks_per_quarter": TPQ,
        "time_signatures": [{"measure": 0, "numerator": 6, "denominator": 8}],
        "voices": [events({1: [4, 2, 4, 2]}, [1] * 16)],
    })
    # Constant rhythm: quarter notes in 4/4, 16 bars.
    write("regular_quarters.json", {
        "title": "Regular quarter-note etude",
        "ticks_per_quarter": TPQ,
        "time_signatures": [{"measure": 0, "numerator": 4, "denominator": 4}],
        "voices": [[{"onset": i * TPQ, "duration": TPQ} for i in range(64)]],
    })


if __name__ == "__main__":
    main()
