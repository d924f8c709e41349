from django.urls import path, include
from rest_framework.routers import DefaultRouter
from . import views

app_name = 'basis'

router = DefaultRouter()
router.register(r'tables', views.CoefficientTableViewSet, basename='table')

urlpatterns = [
    path('', include(router.urls)),
]
