import sys
import setuptools

if sys.version_info < (3, 8):
    sys.stdout.write('bhlearn requires python 3.8 or newer')
    sys.exit(1)

setuptools.setup()
