import os
import sys

# ctest points this at the module built in the CMake tree; an editable install
# would otherwise shadow it through its import hook.
_build = os.environ.get("GABORLAT_PYTHONPATH")
if _build:
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.path.insert(0, _build)
