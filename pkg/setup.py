from __future__ import annotations

from pathlib import Path
from typing import List

from setuptools import find_packages, setup


ROOT = Path(__file__).resolve().parent


def _read_text(path: Path) -> str:
    if not path.exists():
        return ""
    return path.read_text(encoding="utf-8")


def _read_requirements(path: Path) -> List[str]:
    if not path.exists():
        return []

    requirements: List[str] = []
    for raw_line in path.read_text(encoding="utf-8-sig").splitlines():
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        requirements.append(line)
    return requirements


engine_reqs = _read_requirements(ROOT / "apps" / "dt-engine" / "requirements.txt")
runtime_reqs = [req for req in engine_reqs if not req.lower().startswith("pytest")]
test_reqs = [req for req in engine_reqs if req.lower().startswith("pytest")]

extras = {
    "test": test_reqs,
}
extras["dev"] = sorted(set(test_reqs))


setup(
    name="quiver-dt-engine",
    version="0.3.0",
    description="Maximal green sequences and refined DT invariants of quivers, computed exactly.",
    long_description=_read_text(ROOT / "README.md"),
    long_description_content_type="text/markdown",
    python_requires=">=3.10",
    package_dir={"": "apps/dt-engine"},
    packages=find_packages(where="apps/dt-engine", include=["app", "app.*"]),
    include_package_data=True,
    package_data={
        "app": [
            "data/sample/*.json",
            "data/sample/*.yaml",
        ]
    },
    install_requires=runtime_reqs,
    extras_require=extras,
    entry_points={
        "console_scripts": [
            "dt-engine=app.cli:main",
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=[
        "quiver",
        "cluster-mutation",
        "maximal-green-sequence",
        "donaldson-thomas",
        "quantum-dilogarithm",
    ],
)
