__author__ = "Blair Azzopardi"
