from django.utils.module_loading import autodiscover_modules


def load_grids():
    autodiscover_modules("subfactorkit_grids")
