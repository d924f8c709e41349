from django.db import models
from slugify import slugify

from core.constants import (
    KIND_CHOICES,
    KIND_COEFFICIENTS,
    PROVENANCE_CHOICES,
    PROVENANCE_IMPORTED,
)


class CoefficientTable(models.Model):
    """
    A stored coefficient table of one graph class.
    """
    class_name = models.CharField(max_length=32)
    slug = models.SlugField(max_length=255, blank=True, unique=True)
    nmax = models.PositiveIntegerField()
    provenance = models.CharField(max_length=16, choices=PROVENANCE_CHOICES, default=PROVENANCE_IMPORTED)
    kind = models.CharField(max_length=16, choices=KIND_CHOICES, default=KIND_COEFFICIENTS)
    source = models.CharField(max_length=255, blank=True)
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['class_name', '-created_at']

    def __str__(self):
        return f"{self.class_name} (n <= {self.nmax}, {self.provenance})"

    def save(self, *args, **kwargs):
        """
        Auto-generate slug from class, kind and order, with collision handling.
        """
        if not self.slug:
            base_slug = slugify(f"{self.class_name}-{self.kind}-n{self.nmax}-{self.provenance}")
            slug = base_slug
            counter = 2

            while CoefficientTable.objects.filter(slug=slug).exclude(pk=self.pk).exists():
                slug = f"{base_slug}-{counter}"
                counter += 1

            self.slug = slug

        super().save(*args, **kwargs)


class CoefficientRecord(models.Model):
    """
    One count of a stored table. Counts exceed 64 bits, so they are kept
    as decimal strings; m is null in totals tables.
    """
    table = models.ForeignKey(
        CoefficientTable,
        on_delete=models.CASCADE,
        related_name='records'
    )
    n = models.PositiveIntegerField()
    m = models.PositiveIntegerField(null=True, blank=True)
    count = models.CharField(max_length=255)

    class Meta:
        constraints = [
            models.UniqueConstraint(
                fields=['table', 'n', 'm'],
                name='unique_record_table_n_m'
            )
        ]
        ordering = ['table', 'n', 'm']

    def __str__(self):
        if self.m is None:
            return f"{self.table.class_name}[{self.n}] = {self.count}"
        return f"{self.table.class_name}[{self.n}, {self.m}] = {self.count}"

    @property
    def value(self):
        return int(self.count)
