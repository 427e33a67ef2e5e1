from django.test import TestCase
from django.urls import reverse

from maxsub.harness import ExperimentSpec, RunRecord
from maxsub.models import Experiment, Run
from maxsub.objectives import ObjectiveKind, SyntheticSpec


def _records():
    return [
        RunRecord('main', 5, 2 ** 64 - 1, 10.0, 500, 1.5, False, 0),
        RunRecord('main', 5, 12, 14.0, 520, 1.7, False, 1),
        RunRecord('samplegreedy', 5, 13, 9.0, 80, 0.2, True, 0),
        RunRecord('samplegreedy', 5, 14, 11.0, 90, 0.2, False, 1),
    ]


def _spec():
    return ExperimentSpec(
        kind=ObjectiveKind.COVERAGE,
        algos=['main', 'samplegreedy'],
        ks=[5],
        synthetic=SyntheticSpec(ObjectiveKind.COVERAGE, 20),
        reps=2,
        master_seed=3,
    )


class ExperimentModelTests(TestCase):

    def test_store_keeps_every_run(self):
        experiment = Experiment.store(_spec(), _records(), 'synthetic coverage n=20')
        self.assertEqual(experiment.status, 'DONE')
        self.assertIsNotNone(experiment.completed_at)
        self.assertEqual(experiment.lam, 0.75)
        self.assertEqual(experiment.runs.count(), 4)
        self.assertEqual(experiment.failure_rate(), 0.25)

    def test_records_round_trip(self):
        experiment = Experiment.store(_spec(), _records(), 'synthetic')
        stored = sorted(experiment.to_records(), key=lambda r: (r.algo, r.rep))
        self.assertEqual(stored, _records())

    def test_failure_rate_without_runs(self):
        experiment = Experiment.objects.create(objective='graph-cut', source='x', eps=0.1, t_s=0.372,
                                               reps=1, master_seed='0')
        self.assertEqual(experiment.failure_rate(), 0.0)

    def test_complete_marks_failure(self):
        experiment = Experiment.objects.create(objective='graph-cut', source='x', eps=0.1, t_s=0.372,
                                               reps=1, master_seed='0')
        experiment.complete(failed=True)
        experiment.refresh_from_db()
        self.assertEqual(experiment.status, 'FAILED')

    def test_str(self):
        experiment = Experiment.store(_spec(), _records(), 'synthetic')
        self.assertEqual(str(experiment), 'coverage-diversity - synthetic - DONE')
        self.assertEqual(str(Run.objects.filter(algo='main').first()), 'main k=5 rep 0: 10')


class ExperimentViewTests(TestCase):

    def setUp(self):
        self.experiment = Experiment.store(_spec(), _records(), 'synthetic')

    def test_list(self):
        response = self.client.get(reverse('experiment_list'))
        self.assertEqual(response.status_code, 200)
        entry, = response.json()['experiments']
        self.assertEqual(entry['runs'], 4)
        self.assertEqual(entry['objective'], 'coverage-diversity')

    def test_summary(self):
        response = self.client.get(reverse('experiment_summary', args=[self.experiment.pk]))
        body = response.json()
        self.assertEqual(body['failure_rate'], 0.25)
        main, sample = body['rows']
        self.assertEqual(main['algo'], 'main')
        self.assertEqual(main['mean_value'], 12.0)
        self.assertEqual(main['std_value'], 2.0)
        self.assertEqual(sample['failure_rate'], 0.5)

    def test_summary_of_empty_experiment(self):
        empty = Experiment.objects.create(objective='graph-cut', source='x', eps=0.1, t_s=0.372,
                                          reps=1, master_seed='0')
        response = self.client.get(reverse('experiment_summary', args=[empty.pk]))
        self.assertEqual(response.json()['rows'], [])

    def test_plot(self):
        response = self.client.get(reverse('experiment_plot', args=[self.experiment.pk]))
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response['Content-Type'], 'image/svg+xml')
        self.assertIn(b'data-algo="main"', response.content)

    def test_missing_experiment(self):
        response = self.client.get(reverse('experiment_summary', args=[9999]))
        self.assertEqual(response.status_code, 404)

    def test_plot_without_runs(self):
        empty = Experiment.objects.create(objective='graph-cut', source='x', eps=0.1, t_s=0.372,
                                          reps=1, master_seed='0')
        response = self.client.get(reverse('experiment_plot', args=[empty.pk]))
        self.assertEqual(response.status_code, 404)
