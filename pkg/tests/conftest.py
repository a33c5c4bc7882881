import hypothesis

# first calls populate lru caches, which can trip the per-example deadline
hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.load_profile("default")
