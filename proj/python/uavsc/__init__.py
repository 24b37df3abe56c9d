# Copyright 2026 The uavsc Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy of
# the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations under
# the License.

"""Python interface to the UAV swarm semantic-compression simulator."""

import csv
import io
import json

from ._core import (
    UavscError,
    bandwidth_utilization,
    compression_ratio,
    lexical_score,
    preset_config,
    preset_names,
    presets_table,
    sample_positions,
    step_toward,
)
from . import _core

__all__ = [
    "UavscError",
    "bandwidth_utilization",
    "compression_ratio",
    "lexical_score",
    "preset_config",
    "preset_names",
    "presets_table",
    "run_experiment",
    "sample_positions",
    "simulate",
    "step_toward",
]


def simulate(scenario, seed, engine="identity", scorer="lexical"):
    """Run one seeded trial and return its record (log, final swarm, metrics)."""
    return json.loads(_core.simulate_json(scenario, seed, engine, scorer))


def run_experiment(**options):
    """Run an experiment from config keys (scenario, engine, trials, seed, ...).

    Returns the aggregate row as a dict of strings.
    """
    text = "".join(f"{key} = {value}\n" for key, value in options.items())
    rows = list(csv.DictReader(io.StringIO(_core.experiment_csv(text))))
    return rows[0]
