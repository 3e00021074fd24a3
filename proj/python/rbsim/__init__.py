# Copyright 2026 The rbsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Three-qubit randomized-benchmarking simulation toolkit."""

try:
    from rbsim._rbsim import *  # noqa: F401,F403  (installed layout)
    from rbsim import _rbsim as _impl
except ImportError:  # build-tree layout: extension on sys.path directly
    from _rbsim import *  # noqa: F401,F403
    import _rbsim as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
