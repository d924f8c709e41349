"""
Development settings for k33lab_project.
"""

from .base import *

DEBUG = True

# Allow all hosts in development
ALLOWED_HOSTS = ['*']

# CORS settings for development
CORS_ALLOW_ALL_ORIGINS = True

# Verbose console output while iterating on the enumeration code
LOGGING['handlers']['console']['level'] = 'INFO'
