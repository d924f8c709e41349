# Generated by Django 5.2.6 on 2026-10-19 09:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CoefficientTable',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('class_name', models.CharField(max_length=32)),
                ('slug', models.SlugField(blank=True, max_length=255, unique=True)),
                ('nmax', models.PositiveIntegerField()),
                ('provenance', models.CharField(choices=[('oracle', 'Oracle'), ('imported', 'Imported'), ('computed', 'Computed')], default='imported', max_length=16)),
                ('kind', models.CharField(choices=[('coefficients', 'Coefficients (n, m, count)'), ('totals', 'Totals (n, count)')], default='coefficients', max_length=16)),
                ('source', models.CharField(blank=True, max_length=255)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'ordering': ['class_name', '-created_at'],
            },
        ),
        migrations.CreateModel(
            name='CoefficientRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveIntegerField()),
                ('m', models.PositiveIntegerField(blank=True, null=True)),
                ('count', models.CharField(max_length=255)),
                ('table', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='records', to='basis.coefficienttable')),
            ],
            options={
                'ordering': ['table', 'n', 'm'],
            },
        ),
        migrations.AddConstraint(
            model_name='coefficientrecord',
            constraint=models.UniqueConstraint(fields=('table', 'n', 'm'), name='unique_record_table_n_m'),
        ),
    ]
