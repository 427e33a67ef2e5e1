from django.http import Http404, HttpResponse, JsonResponse
from django.shortcuts import get_object_or_404

from .harness import summarize
from .models import Experiment
from .reporting import render_svg_string


def experiment_list(request):
    """Stored experiments, newest first"""
    experiments = [
        {
            'id': e.pk,
            'objective': e.objective,
            'source': e.source,
            'status': e.status,
            'runs': e.runs.count(),
        }
        for e in Experiment.objects.all()
    ]
    return JsonResponse({'experiments': experiments})


def experiment_summary(request, experiment_id):
    """Per (algorithm, k) aggregates of a stored experiment"""
    experiment = get_object_or_404(Experiment, id=experiment_id)
    records = experiment.to_records()
    rows = [vars(row) for row in summarize(records)] if records else []
    return JsonResponse({
        'experiment': experiment.pk,
        'objective': experiment.objective,
        'status': experiment.status,
        'failure_rate': experiment.failure_rate(),
        'rows': rows,
    })


def experiment_plot(request, experiment_id):
    experiment = get_object_or_404(Experiment, id=experiment_id)
    records = experiment.to_records()
    if not records:
        raise Http404('Experiment has no runs')
    return HttpResponse(render_svg_string(summarize(records)), content_type='image/svg+xml')
