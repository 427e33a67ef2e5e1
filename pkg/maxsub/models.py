from django.db import models
from django.utils import timezone

from .harness import RunRecord


class Experiment(models.Model):
    """Model to store one benchmark invocation"""
    STATUS_CHOICES = [
        ('ACTIVE', 'Active'),
        ('DONE', 'Done'),
        ('FAILED', 'Failed'),
    ]
    OBJECTIVE_CHOICES = [
        ('coverage-diversity', 'Coverage-diversity'),
        ('facility-diversity', 'Facility-diversity'),
        ('graph-cut', 'Graph cut'),
    ]
    P_MODE_CHOICES = [
        ('theoretical', 'Theoretical'),
        ('practical', 'Practical'),
    ]

    objective = models.CharField(max_length=20, choices=OBJECTIVE_CHOICES)
    lam = models.FloatField(null=True, blank=True, help_text="Diversity weight for coverage-diversity")
    source = models.CharField(max_length=255, help_text="Data file path or synthetic instance description")
    eps = models.FloatField()
    t_s = models.FloatField()
    p_mode = models.CharField(max_length=12, choices=P_MODE_CHOICES, default='practical')
    reps = models.PositiveIntegerField()
    master_seed = models.CharField(max_length=20)
    status = models.CharField(max_length=10, choices=STATUS_CHOICES, default='ACTIVE')
    created_at = models.DateTimeField(auto_now_add=True)
    completed_at = models.DateTimeField(null=True, blank=True)

    def __str__(self):
        return f"{self.objective} - {self.source} - {self.status}"

    class Meta:
        ordering = ['-created_at']

    def complete(self, failed=False):
        self.status = 'FAILED' if failed else 'DONE'
        self.completed_at = timezone.now()
        self.save()

    def failure_rate(self):
        total = self.runs.count()
        if total == 0:
            return 0.0
        return self.runs.filter(failed=True).count() / total

    def to_records(self):
        return [run.to_record() for run in self.runs.all()]

    @classmethod
    def store(cls, spec, records, source):
        """Persist a finished experiment together with its runs"""
        experiment = cls.objects.create(
            objective=spec.kind.value,
            lam=spec.lam if spec.kind.value == 'coverage-diversity' else None,
            source=source,
            eps=spec.eps,
            t_s=spec.t_s,
            p_mode=spec.p_mode.value if hasattr(spec.p_mode, 'value') else spec.p_mode,
            reps=spec.reps,
            master_seed=str(spec.master_seed),
        )
        Run.objects.bulk_create([Run.from_record(experiment, r) for r in records])
        experiment.complete()
        return experiment


class Run(models.Model):
    """Model to store one seeded solver execution"""
    experiment = models.ForeignKey(Experiment, on_delete=models.CASCADE, related_name='runs')
    algo = models.CharField(max_length=20)
    k = models.PositiveIntegerField()
    repetition = models.PositiveIntegerField()
    # 64-bit unsigned seeds overflow a signed BigIntegerField
    seed = models.CharField(max_length=20)
    value = models.FloatField()
    queries = models.BigIntegerField()
    wall_ms = models.FloatField()
    failed = models.BooleanField(default=False)

    def __str__(self):
        return f"{self.algo} k={self.k} rep {self.repetition}: {self.value:g}"

    class Meta:
        ordering = ['algo', 'k', 'repetition']
        unique_together = ['experiment', 'algo', 'k', 'repetition']

    def to_record(self):
        return RunRecord(self.algo, self.k, int(self.seed), self.value, self.queries,
                         self.wall_ms, self.failed, self.repetition)

    @classmethod
    def from_record(cls, experiment, record):
        return cls(
            experiment=experiment,
            algo=record.algo,
            k=record.k,
            repetition=record.rep,
            seed=str(record.seed),
            value=record.value,
            queries=record.queries,
            wall_ms=record.wall_ms,
            failed=record.failed,
        )
