"""boolconv - convergências e topologias sequenciais em álgebras de Boole finitas."""

__version__ = "0.1.0"
