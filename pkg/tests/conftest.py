def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="also run the minutes-long checks (the n=5 intertwiner oracle)",
    )
