# Copyright 2026 The gkc Authors
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

"""Grover k-coloring circuit synthesis."""

from ._core import (
    GkcError,
    Graph,
    cost_table,
    marked_states,
    optimal_iterations,
    oracle_qasm,
    qubit_ceiling,
    run,
    solutions,
    success_probability,
    synthesize,
)

__all__ = [
    "GkcError",
    "Graph",
    "cost_table",
    "marked_states",
    "optimal_iterations",
    "oracle_qasm",
    "qubit_ceiling",
    "run",
    "solutions",
    "success_probability",
    "synthesize",
]
