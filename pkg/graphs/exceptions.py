class PermgraphError(Exception):
    """
    Base exception class for every error raised by the permanental graph tools
    """

    pass


class DimensionError(PermgraphError):
    """
    Exception in case two objects of different sizes are combined
    """

    pass


class CapacityError(PermgraphError):
    """
    Exception if an enumeration or kernel is asked for a size above its limit
    """

    pass


class UnderflowError(PermgraphError):
    """
    Exception in case of projecting a graph that has a single vertex
    """

    pass


class GraphFormatError(PermgraphError):
    """
    Exception for malformed graph, permutation, partition or rational text
    """

    pass


class InvalidParameterError(PermgraphError):
    """
    Exception for model parameters outside their valid range, e.g. alpha <= 0
    """

    pass
