from inspect import cleandoc
from os import chdir
from os.path import isdir
from shutil import rmtree
from typing import Final

from globals import *

chdir(PROJECT_DIR)

for setup_dir in filter(isdir, SETUP_DIRS):
    rmtree(setup_dir)

run_requirements: Final = '\n'.join(f'    - {requirement}' for requirement in REQUIREMENTS)
entry_points: Final = '\n'.join(f'    - {script}' for script in CONSOLE_SCRIPTS)

conda_yml_content: Final = cleandoc(
    f"""
    package:
      name: {PROJECT_NAME}
      version: {VERSION}

    build:
      number: 1
      entry_points:
    {{entry_points}}

    requirements:
      build:
        - python{PYTHON_VERSION}
        - setuptools
      run:
        - python{PYTHON_VERSION}
    {{run_requirements}}

    test:
      imports:
        - {PROJECT_NAME}
      commands:
        - {PROJECT_NAME} --help

    about:
      summary: {SLOGAN}
    """
).format(entry_points=entry_points, run_requirements=run_requirements)
conda_sh_content = cleandoc(
    """
    #!/usr/bin/env bash
    python setup.py install
    """
)
conda_bat_content = cleandoc(
    """
    "%PYTHON%" setup.py install
    if errorlevel 1 exit 1
    """
)

with open(CONDA_YML_FILE, 'w') as out:
    out.write(conda_yml_content)
with open(CONDA_SH_FILE, 'w') as out:
    out.write(conda_sh_content)
with open(CONDA_BAT_FILE, 'w') as out:
    out.write(conda_bat_content)
