import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="stableset",
    author="stableset developers",
    description="Exact stability, tree and root bound computations for independence polynomials",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_namespace_packages(include=["stableset.*"]),
    include_package_data=True,
    use_scm_version={"write_to": "stableset/base/version.py", "fallback_version": "0.0.0"},
    setup_requires=["setuptools_scm"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: Public Domain",
        "Operating System :: OS Independent",
    ],
    license="NIST software License",
    install_requires=[
        "appdirs",
        'importlib-metadata ; python_version < "3.8"',
        "networkx",
        "numpy",
        "pandas",
        "sympy",
    ],
    extras_require={
        "test": ["unittest-xml-reporting"],
    },
    entry_points={
        "console_scripts": [
            "stableset=stableset.utilities.cli:main",
            "stableset-config=stableset.base.config:main",
        ],
        "stableset.named_graph": [
            "schlafli=stableset.base.named:schlafli_graph",
            "c6=stableset.base.named:c6_graph",
            "w6=stableset.base.named:w6_graph",
            "figP=stableset.base.named:fig_p_graph",
        ],
    },
    python_requires=">=3.7",
)
