#!/usr/bin/env python3
# Copyright 2026 The ipwdm Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Solves an exported LP file with HiGHS and writes `name value` lines."""

import argparse
import sys


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("model", help="CPLEX LP file")
    parser.add_argument("solution", help="output solution file")
    parser.add_argument("--time-limit", type=float, default=600.0)
    args = parser.parse_args()

    try:
        import highspy
    except ImportError:
        print("highspy is not installed", file=sys.stderr)
        return 3

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    h.setOptionValue("time_limit", args.time_limit)
    if h.readModel(args.model) != highspy.HighsStatus.kOk:
        print("cannot read " + args.model, file=sys.stderr)
        return 1
    h.run()
    status = h.getModelStatus()
    if status != highspy.HighsModelStatus.kOptimal:
        print("status " + h.modelStatusToString(status), file=sys.stderr)
        return 1
    lp = h.getLp()
    values = h.getSolution().col_value
    with open(args.solution, "w") as out:
        out.write("# Objective value = %.12g\n" % h.getInfo().objective_function_value)
        for name, value in zip(lp.col_names_, values):
            if abs(value - round(value)) < 1e-9:
                value = round(value)
            out.write("%s %.12g\n" % (name, value))
    return 0


if __name__ == "__main__":
    sys.exit(main())
