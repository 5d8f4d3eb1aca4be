from ...errors import ParameterError

class TwoPlayersMixin():
    """ For orders defined only on bivariate distributions """

    def __init__(self, F, G, *args, **kwargs):
        if F.players != 2 or G.players != 2:
            raise ParameterError(
                f"{self.__class__.__name__} compares 2-player distributions, "
                f"got {F.players} and {G.players} players"
            )
        super().__init__(F, G, *args, **kwargs)
