# 2026 bhlearn developers

__author__ = 'bhlearn developers'
__email__ = 'bhlearn@users.noreply.github.com'
__version__ = '0.1.0-beta'
__date__ = '17 October 2026'
__license__ = 'gpl-3.0'
__status__ = 'Beta'
