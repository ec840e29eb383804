class ShapeCompilerError(Exception): pass

class ImageDecodeError(ShapeCompilerError): pass

class DimensionMismatchError(ShapeCompilerError): pass

class EmptySpansError(ShapeCompilerError): pass

class ConfigError(ShapeCompilerError): pass

class DocumentError(ShapeCompilerError): pass



class DatasetError(ShapeCompilerError): pass

class ManifestError(DatasetError): pass

class SplitError(DatasetError): pass

class AnalysisError(ShapeCompilerError): pass
