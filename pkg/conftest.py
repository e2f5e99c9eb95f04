import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'apaver.settings')
django.setup()
