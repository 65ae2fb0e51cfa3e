class VTMError(Exception):
    def __init__(self, errr: str):
        super().__init__(errr)


class CycleParseError(VTMError):
    pass


class InvalidPermutation(VTMError):
    pass


class GroupParamError(VTMError):
    pass


class CapExceeded(VTMError):
    def __init__(self, cap: int):
        super().__init__(f"group has more than {cap} elements")
        self.cap = cap


class CatalogError(VTMError):
    pass


class SubsetSizeError(VTMError):
    pass


class ComplexError(VTMError):
    pass


class NotPseudomanifold(ComplexError):
    def __init__(self, ridge: tuple, count: int):
        super().__init__(
            f"ridge {list(ridge)} lies in {count} facets instead of exactly two"
        )
        self.ridge = ridge
        self.count = count


class IllegalMove(VTMError):
    pass


class ComplexFileError(VTMError):
    pass
