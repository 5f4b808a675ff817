from setuptools import setup, find_packages

setup(
    name="base-pulse",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.11.3",
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=1.0.0",
        "prometheus-client>=0.17.0",
        "python-json-logger>=2.0.7",
        "tqdm>=4.65.0"
    ],
    entry_points={
        "console_scripts": [
            "base-pulse=src.cli:main_entry",
        ]
    }
)
