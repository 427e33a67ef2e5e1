from django.contrib import admin
from .models import Experiment, Run


class RunInline(admin.TabularInline):
    model = Run
    extra = 0
    readonly_fields = ['algo', 'k', 'repetition', 'seed', 'value', 'queries', 'wall_ms', 'failed']


@admin.register(Experiment)
class ExperimentAdmin(admin.ModelAdmin):
    list_display = ['objective', 'source', 'eps', 'reps', 'status', 'failure_rate', 'created_at']
    list_filter = ['objective', 'status', 'created_at']
    search_fields = ['source']
    readonly_fields = ['created_at', 'completed_at']
    inlines = [RunInline]


@admin.register(Run)
class RunAdmin(admin.ModelAdmin):
    list_display = ['experiment', 'algo', 'k', 'repetition', 'value', 'queries', 'failed']
    list_filter = ['algo', 'failed']
    search_fields = ['algo']
