import hypothesis

# exhaustive helpers make individual examples slow on first call while the
# enumeration cache warms up, so per-example deadlines are disabled
hypothesis.settings.register_profile("suite", deadline=None, max_examples=100)
hypothesis.settings.load_profile("suite")
