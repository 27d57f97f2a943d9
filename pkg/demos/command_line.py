"""
Driving the command line
========================

The ``hardy-adjoint`` entry point prints one JSON document per call. Here it is
called in-process.
"""

import contextlib
import io
import json

from hardy_adjoint.cli import main


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, json.loads(buf.getvalue())


code, doc = run("classify", "z/(2*z+4)")
print(code, doc["class"], doc["phi_inf"])

code, doc = run("branches", "z^2", "--at", "0.25")
print(code, [b["sigma"] for b in doc["points"][0]["branches"]])

code, doc = run("adjoint", "z^2", "--f", "z^4+z^2", "--coeffs", "4")
print(code, [round(c["re"], 12) for c in doc["coeffs"]])

# invalid maps exit with status 2
code, doc = run("classify", "2*z")
print(code, doc["error"])
