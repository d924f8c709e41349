from django.contrib import admin
from .models import CoefficientRecord, CoefficientTable


class CoefficientRecordInline(admin.TabularInline):
    model = CoefficientRecord
    extra = 0
    fields = ['n', 'm', 'count']


@admin.register(CoefficientTable)
class CoefficientTableAdmin(admin.ModelAdmin):
    list_display = ['id', 'class_name', 'kind', 'nmax', 'provenance', 'source', 'created_at']
    list_filter = ['class_name', 'kind', 'provenance']
    search_fields = ['class_name', 'slug', 'source']
    readonly_fields = ['slug', 'created_at', 'updated_at']
    inlines = [CoefficientRecordInline]


@admin.register(CoefficientRecord)
class CoefficientRecordAdmin(admin.ModelAdmin):
    list_display = ['id', 'table', 'n', 'm', 'count']
    list_filter = ['table__class_name', 'n']
    search_fields = ['table__class_name', 'table__slug']
