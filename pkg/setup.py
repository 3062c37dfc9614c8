from setuptools import setup


def readme():
    with open('README.md') as f:
        return f.read()


def version():
    ns = {}
    with open('seqgen/_version.py') as f:
        exec(f.read(), ns)
    return ns['__version__']


# -----
# Setup
# -----
setup(name='seqgen',
      version=version(),
      description='Compiler and simulator for the sequential generation of '
                  'matrix-product states with a single ancilla',
      long_description=readme(),
      long_description_content_type='text/markdown',
      classifiers=[
        'Development Status :: 4 - Beta',
        'Programming Language :: Python :: 3',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
                  ],
      packages=['seqgen', 'seqgen.scripts'],
      include_package_data=True,
      zip_safe=False,
      python_requires='>=3.8',
      install_requires=['numpy>=1.17', 'scipy>=1.4'],
      extras_require={'test': ['pytest', 'hypothesis']},
      entry_points={'console_scripts': ['seqgen = seqgen.scripts.cli:entry_point']}
      )
