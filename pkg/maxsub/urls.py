from django.urls import path
from . import views

urlpatterns = [
    path('experiments/', views.experiment_list, name='experiment_list'),
    path('experiments/<int:experiment_id>/summary/', views.experiment_summary, name='experiment_summary'),
    path('experiments/<int:experiment_id>/plot.svg', views.experiment_plot, name='experiment_plot'),
]
