from setuptools import find_packages, setup

with open("requirements.txt", encoding="utf-8") as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith("#")]

setup(
    name="skeinkit",
    version="0.1.0",
    description="着色括号纽结不变量的精确计算与 Reidemeister 公理验证",
    packages=find_packages(include=["src", "src.*"]),
    package_data={"src": ["data/*.jsonl"]},
    python_requires=">=3.8",
    install_requires=[r for r in requirements if not r.startswith("pytest")],
    extras_require={"test": ["pytest>=7.0.0"]},
    entry_points={"console_scripts": ["skeinkit=src.cli:main"]},
)
