from unittest.mock import patch

from pdsets.parallel import process_parallel


def test_process_parallel():
    """Results come back in the order of the items."""
    items = [1, 2, 3, 4, 5]
    results = process_parallel(items, lambda x: x * 2)
    assert results == [2, 4, 6, 8, 10]


def test_process_parallel_single_worker():
    results = process_parallel([3, 1, 2], lambda x: x + 1, max_workers=1)
    assert results == [4, 2, 3]


def test_process_parallel_with_error():
    """Test processing items in parallel with one failing."""
    items = [1, 2, 0, 4, 5]

    def processor(x):
        return 10 // x

    with patch("pdsets.parallel.logger") as mock_logger:
        results = process_parallel(items, processor)

        # Should have logged the error
        assert mock_logger.error.called
        assert mock_logger.exception.called

        assert results == [10, 5, None, 2, 2]


def test_process_parallel_with_error_in_calling_thread():
    with patch("pdsets.parallel.logger") as mock_logger:
        results = process_parallel([0, 1], lambda x: 1 // x, max_workers=1)
        assert mock_logger.error.called
        assert results == [None, 1]
