"""
Seshadri Toolkit - exact positivity computations

This package computes and certifies local positivity of vector bundles and
divisor classes, with every number kept exact:

1. **Exact numbers** (`exact/`)
   - `quadratic.py` - rationals extended by a single square root
   - `radicals.py` - higher roots, `interval.py` - certified enclosures
   - `formatting.py` - text forms shared by the CLI and JSON documents

2. **Bundles on curves** (`curves/`)
   - Harder-Narasimhan slopes and the bundle operations acting on them

3. **Seshadri calculus** (`calculus/`)
   - Curve catalogs, upper/lower bounds, known values, ampleness verdicts

4. **Products of a curve with itself** (`products/`)
   - `certify.py` - nef certificates for a f1 + b f2 + c d
   - `tangency.py`, `slopes.py`, `region.py` - geometry around the nef boundary

5. **Jet thresholds** (`jets/`)

6. **Command line** (`cli/`) - `seshadri <area> <command>`
"""

__version__ = "0.1.0"
