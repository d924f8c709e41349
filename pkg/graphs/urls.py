from django.urls import path

from . import views

app_name = 'graphs'

urlpatterns = [
    path('decompose/', views.DecomposeView.as_view(), name='decompose'),
]
