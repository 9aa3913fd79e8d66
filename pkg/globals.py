from pathlib import Path as _Path

SETUP_DIRS = (
    'build',
    'quivalg.egg-info',
    'dist'
)
MYPY_CACHE_DIR = '.mypy_cache'

VERSION = '0.1.0'
SLOGAN = 'Exact computations with bound quiver algebras, tilting complexes and their endomorphism rings'
PROJECT_NAME = 'quivalg'
PROJECT_URL = 'https://github.com/andrewsonin/quivalg'

PROJECT_DIR = _Path(__file__).parent
README_FILE = PROJECT_DIR / 'README.md'

CONDA_YML_FILE = 'meta.yaml'
CONDA_SH_FILE = 'build.sh'
CONDA_BAT_FILE = 'bld.bat'

PYTHON_VERSION = '~=3.8'
LICENCE = 'MIT License'

AUTHOR = 'Andrew Sonin'
EMAIL = 'sonin.cel@gmail.com'

REQUIREMENTS = (
    'sympy>=1.13',
    'jsonschema>=4'
)
CONSOLE_SCRIPTS = (
    'quivalg = quivalg.cli:main',
)
