from graphs.exceptions import PermgraphError


class UnknownSupportFamilyError(PermgraphError):
    """
    Exception in case a support family tag is not one of the shipped families
    """

    pass
