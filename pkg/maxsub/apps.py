from django.apps import AppConfig


class MaxsubConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'maxsub'
    verbose_name = 'Submodular maximization benchmarks'
