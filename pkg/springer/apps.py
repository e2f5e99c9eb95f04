from django.apps import AppConfig


class SpringerConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'springer'
    verbose_name = 'Affine Springer fiber cells'
