from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='Experiment',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('objective', models.CharField(choices=[('coverage-diversity', 'Coverage-diversity'), ('facility-diversity', 'Facility-diversity'), ('graph-cut', 'Graph cut')], max_length=20)),
                ('lam', models.FloatField(blank=True, help_text='Diversity weight for coverage-diversity', null=True)),
                ('source', models.CharField(help_text='Data file path or synthetic instance description', max_length=255)),
                ('eps', models.FloatField()),
                ('t_s', models.FloatField()),
                ('p_mode', models.CharField(choices=[('theoretical', 'Theoretical'), ('practical', 'Practical')], default='practical', max_length=12)),
                ('reps', models.PositiveIntegerField()),
                ('master_seed', models.CharField(max_length=20)),
                ('status', models.CharField(choices=[('ACTIVE', 'Active'), ('DONE', 'Done'), ('FAILED', 'Failed')], default='ACTIVE', max_length=10)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('completed_at', models.DateTimeField(blank=True, null=True)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='Run',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('algo', models.CharField(max_length=20)),
                ('k', models.PositiveIntegerField()),
                ('repetition', models.PositiveIntegerField()),
                ('seed', models.CharField(max_length=20)),
                ('value', models.FloatField()),
                ('queries', models.BigIntegerField()),
                ('wall_ms', models.FloatField()),
                ('failed', models.BooleanField(default=False)),
                ('experiment', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='runs', to='maxsub.experiment')),
            ],
            options={
                'ordering': ['algo', 'k', 'repetition'],
                'unique_together': {('experiment', 'algo', 'k', 'repetition')},
            },
        ),
    ]
