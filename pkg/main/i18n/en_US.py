#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""English Language Pack (US English)

Labels and messages of the command-line output. Data (polynomials,
state keys, JSON, DOT) is never translated.

Copyright (c) 2024-2026 Tiger
Licensed under the MIT License.
"""

TRANSLATIONS = {
    # ============================================================
    # App Info
    # ============================================================
    "app.name": "Crowell State Space",
    "app.subtitle": "State sums, terminal edge exchanges and torus knot characterization for alternating knots",

    # ============================================================
    # Common Values
    # ============================================================
    "value.yes": "yes",
    "value.no": "no",

    # ============================================================
    # validate
    # ============================================================
    "validate.crossings": "crossings: {count}",
    "validate.faces": "faces: {count}",
    "validate.alternating": "alternating: {value}",
    "validate.reduced": "reduced: {value}",
    "validate.prime": "prime diagram: {value}",

    # ============================================================
    # graph / states
    # ============================================================
    "graph.summary": "{vertices} vertices, {edges} edges",
    "graph.compatible": "region orientation matches coloring: {value}",
    "states.count": "root {root}: {count} states",

    # ============================================================
    # exchange-graph / transform
    # ============================================================
    "exchange.summary": "{nodes} nodes, {edges} edges",
    "exchange.connected": "connected: {value}",
    "exchange.degree_one": "degree-1 nodes: {count}",
    "transform.source": "source T1: {key}",
    "transform.target": "target T2: {key}",
    "transform.length": "exchanges: {count}",

    # ============================================================
    # torus
    # ============================================================
    "torus.yes": "(2,{k}) torus knot, n = {n}",
    "torus.no": "not a (2,2n+1) torus knot",
    "torus.prime": "prime diagram: {value}",
    "torus.note": "note: primality is checked on the diagram via Tait graph 2-connectivity instead of the polynomial factorization argument",

    # ============================================================
    # verify-all
    # ============================================================
    "verify.progress": "Verifying table",
    "verify.pass": "PASS",
    "verify.fail": "FAIL",
    "verify.rejected": "rejected: {reason}",
    "verify.summary": "{passed}/{total} passed ({rate})",
    "verify.torus_family": "torus family: {names}",
    "verify.done": "Verification finished: {passed}/{total} passed in {time}s",

    # ============================================================
    # Errors
    # ============================================================
    "error.parse": "input error: {message}",
    "error.io": "cannot read: {message}",
    "error.rejected": "diagram rejected: {message}",
    "error.theorem": "theorem check failed: {message}",
    "error.unknown_knot": "no knot named {name} in the table",
    "error.config": "invalid arguments: {message}",
}
