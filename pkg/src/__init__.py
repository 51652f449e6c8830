"""
BCCKit Package Initialization
"""

__version__ = '1.0.0'
__author__ = 'BCCKit Team'
__description__ = 'Complexos de circuitos quebrados, h-vetores e critérios de Gorenstein / interseção completa'
