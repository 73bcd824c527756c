"""命令行层：参数解析与子命令处理器。"""
