#!/usr/bin/env python3
"""Regenerates the model fixtures in this directory."""

import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def machine(g, j, breakdown="uo"):
    """Idle -start-> Working -finish-> Idle, Working -break-> Down -repair-> Idle."""
    p = f"{g}{j}"
    gen = {
        "states": ["Idle", "Working", "Down"],
        "initial": "Idle",
        "transitions": [
            ["Idle", p + "1", "Working"],
            ["Working", p + "0", "Idle"],
            ["Working", p + "2", "Down"],
            ["Down", p + "3", "Idle"],
        ],
    }
    return gen, [p + "0", p + "1", p + "2", p + "3"], ([p + "2"] if breakdown == "uo" else [])


def probe_machine(g, j):
    """Unobservable probe as a selfloop on Working."""
    p = f"{g}{j}"
    gen = {
        "states": ["Idle", "Working"],
        "initial": "Idle",
        "transitions": [
            ["Idle", p + "1", "Working"],
            ["Working", p + "0", "Idle"],
            ["Working", p + "2", "Working"],
        ],
    }
    return gen, [p + "0", p + "1", p + "2"], [p + "2"]


def guarded_probe_machine(g, j):
    """Probe only after a private unobservable preparation step."""
    p = f"{g}{j}"
    gen = {
        "states": ["Idle", "Working", "Ready"],
        "initial": "Idle",
        "transitions": [
            ["Idle", p + "1", "Working"],
            ["Working", p + "0", "Idle"],
            ["Working", p + "4", "Ready"],
            ["Ready", p + "2", "Ready"],
            ["Ready", p + "0", "Idle"],
        ],
    }
    return gen, [p + "0", p + "1", p + "2", p + "4"], [p + "2", p + "4"]


def buffer(n1, n2, capacity=2):
    inc = [f"1{j}0" for j in range(1, n1 + 1)]
    dec = [f"2{j}1" for j in range(1, n2 + 1)]
    states = [f"b{c}" for c in range(capacity + 1)]
    tr = []
    for c in range(capacity + 1):
        if c < capacity:
            tr += [[states[c], e, states[c + 1]] for e in inc]
        if c > 0:
            tr += [[states[c], e, states[c - 1]] for e in dec]
    return {"events": inc + dec, "states": states, "initial": "b0", "transitions": tr}


def factory(n1, n2, k1, k2, make=machine, spec=None, sef_mode="auto"):
    events, uo, gens, groups = [], [], {}, []
    relabel = {}
    for g, n, k in ((1, n1, k1), (2, n2, k2)):
        names = []
        for j in range(1, n + 1):
            gen, ev, u = make(g, j)
            name = f"G{g}_{j}"
            gens[name] = gen
            names.append(name)
            events += ev
            uo += u
            for e in ev:
                relabel[e] = e[0] + e[2:]
        groups.append({"name": "input" if g == 1 else "output", "agents": names, "k": k})
    gens["E"] = spec if spec is not None else buffer(n1, n2)
    return {
        "format": "scalsup-model/1",
        "alphabet": {"events": events, "unobservable": uo},
        "generators": gens,
        "relabeling": relabel,
        "groups": groups,
        "spec": "E",
        "flags": {"sef_mode": sef_mode, "state_budget": 1000000},
    }


def write(name, doc):
    (HERE / name).write_text(json.dumps(doc, indent=2) + "\n")


def main():
    write("small_factory_1x1.json", factory(1, 1, 1, 1))
    write("small_factory_2x2.json", factory(2, 2, 2, 1))
    write("small_factory_3x3.json", factory(3, 3, 2, 1))
    write("small_factory_5x5.json", factory(5, 5, 2, 1))

    write("observable_breakdowns_2x2.json",
          factory(2, 2, 2, 1, make=lambda g, j: machine(g, j, breakdown="o")))
    write("silent_probe_2x2.json", factory(2, 2, 2, 1, make=probe_machine))
    write("silent_probe_2x2_full.json", factory(2, 2, 2, 2, make=probe_machine))
    write("observable_breakdowns_2x2_full.json",
          factory(2, 2, 2, 2, make=lambda g, j: machine(g, j, breakdown="o")))

    # Negative: guarded probes break local relabeling observation consistency.
    write("negative_lroc_2x2.json", factory(2, 2, 2, 1, make=guarded_probe_machine))

    # Negative: the spec forbids the second input machine from starting but
    # not the first, so it is not closed under relabeling.
    doc = factory(2, 2, 2, 1)
    forbidden = {"121"}
    doc["generators"]["E"] = {
        "events": doc["alphabet"]["events"],
        "states": ["s"],
        "initial": "s",
        "transitions": [["s", e, "s"] for e in doc["alphabet"]["events"] if e not in forbidden],
    }
    write("negative_normality_2x2.json", doc)

    # Negative: two input machines share a synchronizing event.
    doc = factory(2, 1, 2, 1)
    doc["alphabet"]["events"].append("sync")
    doc["relabeling"]["sync"] = "sy"
    for name in ("G1_1", "G1_2"):
        doc["generators"][name]["transitions"].append(["Idle", "sync", "Idle"])
    write("negative_sef_2x1.json", doc)


if __name__ == "__main__":
    main()
