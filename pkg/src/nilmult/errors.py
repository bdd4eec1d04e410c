"""Exception types shared across modules."""


class InadmissibleParams(ValueError):
    """Parameters violate the constraints of the classification."""


class NotCentral(ValueError):
    """An element expected to be central does not commute with a generator."""


class NotClassTwo(ValueError):
    """A presentation does not visibly force nilpotency class at most two."""


class NoClosedForm(LookupError):
    """No closed multiplier formula is available for this group."""
