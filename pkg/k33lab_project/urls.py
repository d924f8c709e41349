"""
URL configuration for k33lab_project project.
"""
from django.contrib import admin
from django.urls import path, include
from django.conf import settings
from drf_spectacular.views import SpectacularAPIView

urlpatterns = [
    path(settings.ADMIN_URL, admin.site.urls),
    path('api/schema/', SpectacularAPIView.as_view(), name='schema'),
    path('api/', include('basis.urls')),
    path('api/graphs/', include('graphs.urls')),
]
