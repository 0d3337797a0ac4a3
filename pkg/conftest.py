import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "valencylab.settings")
django.setup()
