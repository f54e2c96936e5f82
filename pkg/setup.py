import setuptools

setuptools.setup(
    name="primorialgaps",
    description="Differences between consecutive integers coprime to primorial numbers",
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    version="0.1.0",
    packages=setuptools.find_packages(include=['primorialgaps', 'primorialgaps.*']),
    python_requires='>=3.10',
    install_requires=[
        'numpy',
        'sympy',
    ],
    entry_points={
        'console_scripts': ['primorialgaps = primorialgaps.cli:main'],
    },
)
