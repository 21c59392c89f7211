from hypothesis import settings

# single shared box: generation time varies too much for per-example deadlines
settings.register_profile("stablecore", deadline=None)
settings.load_profile("stablecore")
