# Copyright 2026 The fixlab Authors
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

"""Run every CLI command twice, validate each report against the schema and
check that reruns agree byte for byte apart from wall_time_ms."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(cli, args, workdir, tag):
    out = Path(workdir) / f"{tag}.json"
    csv = Path(workdir) / f"{tag}.csv"
    proc = subprocess.run([cli, *args, "--json", str(out), *(["--csv", str(csv)] if "--trials" in args else [])],
                          capture_output=True, text=True)
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    report = json.loads(out.read_text())
    rows = csv.read_text() if csv.exists() else ""
    return report, rows


def main():
    cli, schema_path, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    commands = [
        ["analyze", "--input", str(data / "pinching.json")],
        ["analyze", "--input", str(data / "identity.json")],
        ["cuntz", "--dim", "16"],
        ["commuting", "--dim", "6", "--ops", "4", "--trials", "30", "--seed", "9"],
        ["fuzz", "--trials", "200", "--seed", "7"],
        ["schur", "--input", str(data / "two_atoms.json"), "--dim", "6", "--tol", "0.4"],
        ["schur", "--input", str(data / "point_mass_i.json"), "--dim", "5"],
    ]
    with tempfile.TemporaryDirectory() as tmp:
        for i, args in enumerate(commands):
            first, rows1 = run(cli, args, tmp, f"a{i}")
            second, rows2 = run(cli, args, tmp, f"b{i}")
            jsonschema.validate(first, schema)
            first.pop("wall_time_ms")
            second.pop("wall_time_ms")
            if json.dumps(first, sort_keys=True) != json.dumps(second, sort_keys=True) or rows1 != rows2:
                raise SystemExit(f"{' '.join(args)}: reruns differ")
            print(f"ok {' '.join(args)}")


if __name__ == "__main__":
    main()
